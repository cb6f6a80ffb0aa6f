//! Group spec grammar.
//!
//! ```text
//! spec  := term ("x" term)*
//! term  := atom | ctor "(" args ")"
//! ctor  := "C" | "E" | "D" | "Dic"
//! args  := integer | spec
//! ```
//!
//! `C(n)` cyclic, `E(q)` elementary abelian of order `q`, `D(n)` dihedral of
//! *order* `n` (so `D(8)` has 8 elements, not 16), `Dic(A)` generalized
//! dicyclic over an abelian `A` with a unique involution.

use std::fmt;

use cayint::group::{
    cyclic, direct_product, elementary_abelian, generalized_dicyclic, make_dihedral, named_group, Group, GroupError,
};
use thiserror::Error;

pub const ATOMS: [&str; 11] = ["Q8", "H2", "H16", "H27", "H32", "A4", "Q8sZ3", "Z4sZ4", "E9sZ2", "D6xZ3", "Dic12"];
const CTORS: [&str; 4] = ["C", "E", "D", "Dic"];

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupSpec {
    Atom(String),
    Cyclic(usize),
    Elementary(usize),
    Dihedral(usize),
    Dic(Box<GroupSpec>),
    /// At least two factors, left to right.
    Product(Vec<GroupSpec>),
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("syntax error at line {line}, column {column}: expected {}", .expected.join(" or "))]
pub struct SyntaxError {
    pub line: usize,
    pub column: usize,
    pub expected: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum BuildError {
    #[error("group order {order} exceeds the cap of {cap}")]
    CapExceeded { order: usize, cap: usize },
    #[error(transparent)]
    Group(#[from] GroupError),
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Atom(name) => f.write_str(name),
            GroupSpec::Cyclic(n) => write!(f, "C({n})"),
            GroupSpec::Elementary(q) => write!(f, "E({q})"),
            GroupSpec::Dihedral(n) => write!(f, "D({n})"),
            GroupSpec::Dic(inner) => write!(f, "Dic({inner})"),
            GroupSpec::Product(factors) => {
                for (i, t) in factors.iter().enumerate() {
                    if i > 0 {
                        f.write_str(" x ")?;
                    }
                    write!(f, "{t}")?;
                }
                Ok(())
            }
        }
    }
}

impl GroupSpec {
    /// Order without building tables; `None` on overflow.
    pub fn order(&self) -> Result<Option<usize>, GroupError> {
        Ok(match self {
            GroupSpec::Atom(name) => Some(named_group(name)?.order()),
            GroupSpec::Cyclic(n) | GroupSpec::Elementary(n) | GroupSpec::Dihedral(n) => Some(*n),
            GroupSpec::Dic(inner) => inner.order()?.and_then(|n| n.checked_mul(2)),
            GroupSpec::Product(factors) => {
                let mut acc = Some(1usize);
                for t in factors {
                    acc = match (acc, t.order()?) {
                        (Some(a), Some(b)) => a.checked_mul(b),
                        _ => None,
                    };
                }
                acc
            }
        })
    }

    /// Builds the multiplication table; the group is named by the canonical spec.
    pub fn build(&self, cap: usize) -> Result<Group, BuildError> {
        match self.order()? {
            Some(n) if n <= cap => {}
            other => return Err(BuildError::CapExceeded { order: other.unwrap_or(usize::MAX), cap }),
        }
        Ok(self.build_unchecked()?.with_name(self.to_string()))
    }

    fn build_unchecked(&self) -> Result<Group, GroupError> {
        match self {
            GroupSpec::Atom(name) => named_group(name),
            GroupSpec::Cyclic(n) => cyclic(*n),
            GroupSpec::Elementary(q) => elementary_abelian(*q),
            GroupSpec::Dihedral(n) => make_dihedral(*n),
            GroupSpec::Dic(inner) => generalized_dicyclic(&inner.build_unchecked()?),
            GroupSpec::Product(factors) => {
                let mut acc = factors[0].build_unchecked()?;
                for t in &factors[1..] {
                    acc = direct_product(&acc, &t.build_unchecked()?)?;
                }
                Ok(acc)
            }
        }
    }
}

pub fn parse_spec(text: &str) -> Result<GroupSpec, SyntaxError> {
    let mut p = Parser { chars: text.chars().collect(), pos: 0 };
    let spec = p.spec()?;
    p.skip_ws();
    if p.pos < p.chars.len() {
        return Err(p.error(&["\"x\"", "end of input"]));
    }
    Ok(spec)
}

struct Parser {
    chars: Vec<char>,
    pos: usize,
}

impl Parser {
    fn skip_ws(&mut self) {
        while self.chars.get(self.pos).is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn error(&self, expected: &[&str]) -> SyntaxError {
        let before = &self.chars[..self.pos.min(self.chars.len())];
        let line = 1 + before.iter().filter(|&&c| c == '\n').count();
        let column = 1 + before.iter().rev().take_while(|&&c| c != '\n').count();
        SyntaxError { line, column, expected: expected.iter().map(|s| s.to_string()).collect() }
    }

    fn spec(&mut self) -> Result<GroupSpec, SyntaxError> {
        let mut factors = vec![self.term()?];
        loop {
            self.skip_ws();
            if self.chars.get(self.pos) == Some(&'x') {
                self.pos += 1;
                factors.push(self.term()?);
            } else {
                break;
            }
        }
        Ok(if factors.len() == 1 { factors.pop().unwrap() } else { GroupSpec::Product(factors) })
    }

    /// Longest atom or constructor name at the cursor that ends at a word boundary
    /// (a `x` right after a name counts as the product operator).
    fn name(&self) -> Option<&'static str> {
        let rest = &self.chars[self.pos..];
        let mut names: Vec<&'static str> = ATOMS.iter().chain(CTORS.iter()).copied().collect();
        names.sort_by_key(|n| std::cmp::Reverse(n.len()));
        names.into_iter().find(|n| {
            let len = n.chars().count();
            rest.len() >= len
                && rest[..len].iter().copied().eq(n.chars())
                && rest.get(len).is_none_or(|&c| !c.is_alphanumeric() || c == 'x')
        })
    }

    fn term(&mut self) -> Result<GroupSpec, SyntaxError> {
        const TERM: &[&str] = &["group name", "\"C(\"", "\"E(\"", "\"D(\"", "\"Dic(\""];
        self.skip_ws();
        let name = self.name().ok_or_else(|| self.error(TERM))?;
        if ATOMS.contains(&name) {
            self.pos += name.len();
            return Ok(GroupSpec::Atom(name.to_string()));
        }
        let start = self.pos;
        self.pos += name.len();
        self.skip_ws();
        if self.chars.get(self.pos) != Some(&'(') {
            self.pos = start;
            return Err(self.error(TERM));
        }
        self.pos += 1;
        let spec = if name == "Dic" {
            GroupSpec::Dic(Box::new(self.spec()?))
        } else {
            let n = self.integer()?;
            match name {
                "C" => GroupSpec::Cyclic(n),
                "E" => GroupSpec::Elementary(n),
                _ => GroupSpec::Dihedral(n),
            }
        };
        self.skip_ws();
        if self.chars.get(self.pos) != Some(&')') {
            return Err(self.error(if name == "Dic" { &["\"x\"", "\")\""] } else { &["\")\""] }));
        }
        self.pos += 1;
        Ok(spec)
    }

    fn integer(&mut self) -> Result<usize, SyntaxError> {
        self.skip_ws();
        let start = self.pos;
        while self.chars.get(self.pos).is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        let digits: String = self.chars[start..self.pos].iter().collect();
        digits.parse().map_err(|_| {
            self.pos = start;
            self.error(&["positive integer"])
        })
    }
}
