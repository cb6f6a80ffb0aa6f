use std::collections::HashSet;

use super::{Group, GroupError};

/// Normal-form word: `(generator index, exponent)` factors, left to right.
pub(crate) type Word = Vec<(u16, i32)>;

/// Element labels plus the generator alphabet used to type elements as words.
#[derive(Clone, Debug)]
pub(crate) struct Labeling {
    gen_names: Vec<String>,
    gen_elems: Vec<Option<usize>>,
    words: Vec<Word>,
    display: Vec<String>,
    display_overridden: bool,
    aliases: Vec<(String, usize)>,
}

fn render(gen_names: &[String], word: &Word) -> String {
    if word.is_empty() {
        return "1".to_string();
    }
    let mut out = String::new();
    for &(g, e) in word {
        out.push_str(&gen_names[g as usize]);
        if e != 1 {
            out.push('^');
            out.push_str(&e.to_string());
        }
    }
    out
}

fn join(a: &str, b: &str) -> String {
    match (a, b) {
        ("1", "1") => "1".to_string(),
        ("1", _) => b.to_string(),
        (_, "1") => a.to_string(),
        _ => format!("{a}{b}"),
    }
}

fn fresh_name(name: &str, taken: &HashSet<String>) -> String {
    let bytes = name.as_bytes();
    if bytes.len() == 1 && bytes[0].is_ascii_lowercase() {
        for step in 1..26u8 {
            let c = (b'a' + (bytes[0] - b'a' + step) % 26) as char;
            let cand = c.to_string();
            if !taken.contains(&cand) {
                return cand;
            }
        }
    }
    let mut cand = format!("{name}'");
    while taken.contains(&cand) {
        cand.push('\'');
    }
    cand
}

pub(crate) enum WordOrder {
    LeftFirst,
    RightFirst,
}

impl Labeling {
    #[cfg(test)]
    /// Labels `1, g1, g2, …` with no generator alphabet.
    pub(crate) fn plain(n: usize) -> Self {
        let display = (0..n).map(|i| if i == 0 { "1".to_string() } else { format!("g{i}") }).collect();
        Labeling {
            gen_names: Vec::new(),
            gen_elems: Vec::new(),
            words: vec![Vec::new(); n],
            display,
            display_overridden: true,
            aliases: Vec::new(),
        }
    }

    pub(crate) fn from_words(gen_names: Vec<String>, gen_elems: Vec<usize>, words: Vec<Word>) -> Self {
        let display = words.iter().map(|w| render(&gen_names, w)).collect();
        Labeling {
            gen_names,
            gen_elems: gen_elems.into_iter().map(Some).collect(),
            words,
            display,
            display_overridden: false,
            aliases: Vec::new(),
        }
    }

    pub(crate) fn len(&self) -> usize {
        self.display.len()
    }

    pub(crate) fn display(&self) -> &[String] {
        &self.display
    }

    pub(crate) fn named_elements(&self) -> Vec<(String, usize)> {
        let mut out: Vec<(String, usize)> = self
            .gen_names
            .iter()
            .zip(&self.gen_elems)
            .filter_map(|(n, e)| e.map(|e| (n.clone(), e)))
            .collect();
        out.extend(self.aliases.iter().cloned());
        out
    }

    pub(crate) fn rename_generators(&mut self, names: &[&str]) {
        assert_eq!(names.len(), self.gen_names.len(), "generator rename arity");
        self.gen_names = names.iter().map(|s| s.to_string()).collect();
        if !self.display_overridden {
            self.display = self.words.iter().map(|w| render(&self.gen_names, w)).collect();
        }
    }

    pub(crate) fn add_alias(&mut self, alias: &str, element: usize) {
        self.aliases.retain(|(a, _)| a != alias);
        self.aliases.push((alias.to_string(), element));
    }

    pub(crate) fn set_display(&mut self, labels: Vec<String>) {
        assert_eq!(labels.len(), self.display.len(), "display label count");
        let unique: HashSet<&String> = labels.iter().collect();
        assert_eq!(unique.len(), labels.len(), "display labels must be unique");
        self.display = labels;
        self.display_overridden = true;
    }

    /// Labeling of pairs `(p, q)` stored at index `p + left_len * q`.
    pub(crate) fn product(left: &Labeling, right: &Labeling, order: WordOrder) -> Labeling {
        let nl = left.len();
        let nr = right.len();
        let mut taken: HashSet<String> = left.gen_names.iter().cloned().collect();
        taken.extend(left.aliases.iter().map(|(a, _)| a.clone()));
        let mut renamed = false;
        let mut right_names = Vec::with_capacity(right.gen_names.len());
        for name in &right.gen_names {
            let n = if taken.contains(name) {
                renamed = true;
                fresh_name(name, &taken)
            } else {
                name.clone()
            };
            taken.insert(n.clone());
            right_names.push(n);
        }
        let right_display: Vec<String> = if renamed && !right.display_overridden {
            right.words.iter().map(|w| render(&right_names, w)).collect()
        } else {
            right.display.clone()
        };

        let shift = left.gen_names.len() as u16;
        let mut gen_names = left.gen_names.clone();
        gen_names.extend(right_names);
        let mut gen_elems = left.gen_elems.clone();
        gen_elems.extend(right.gen_elems.iter().map(|e| e.map(|q| nl * q)));

        let mut words = Vec::with_capacity(nl * nr);
        let mut display = Vec::with_capacity(nl * nr);
        for (rword, rdisp) in right.words.iter().zip(&right_display) {
            let rw: Word = rword.iter().map(|&(g, e)| (g + shift, e)).collect();
            for p in 0..nl {
                let lw = &left.words[p];
                let (w, d) = match order {
                    WordOrder::LeftFirst => {
                        (lw.iter().chain(&rw).copied().collect(), join(&left.display[p], rdisp))
                    }
                    WordOrder::RightFirst => {
                        (rw.iter().chain(lw).copied().collect(), join(rdisp, &left.display[p]))
                    }
                };
                words.push(w);
                display.push(d);
            }
        }
        let unique: HashSet<&String> = display.iter().collect();
        let overridden = left.display_overridden || right.display_overridden;
        if unique.len() != display.len() {
            display = (0..nr)
                .flat_map(|q| (0..nl).map(move |p| (p, q)))
                .map(|(p, q)| format!("({},{})", left.display[p], right_display[q]))
                .collect();
        }
        let mut aliases = left.aliases.clone();
        for (a, q) in &right.aliases {
            if !taken.contains(a) {
                aliases.push((a.clone(), nl * q));
            }
        }
        Labeling { gen_names, gen_elems, words, display, display_overridden: overridden, aliases }
    }

    /// Labeling of a derived group whose element `i` corresponds to parent element `reps[i]`.
    /// `project` maps parent elements to derived elements where defined.
    pub(crate) fn derived(&self, reps: &[usize], project: impl Fn(usize) -> Option<usize>) -> Labeling {
        Labeling {
            gen_names: self.gen_names.clone(),
            gen_elems: self.gen_elems.iter().map(|e| e.and_then(&project)).collect(),
            words: reps.iter().map(|&r| self.words[r].clone()).collect(),
            display: reps.iter().map(|&r| self.display[r].clone()).collect(),
            display_overridden: true,
            aliases: self.aliases.iter().filter_map(|(a, e)| project(*e).map(|x| (a.clone(), x))).collect(),
        }
    }

    pub(crate) fn resolve(&self, group: &Group, text: &str) -> Result<usize, GroupError> {
        let text = text.trim();
        if let Some(i) = self.display.iter().position(|d| d == text) {
            return Ok(i);
        }
        let names = self.named_elements();
        if let Some((_, e)) = names.iter().find(|(n, _)| n == text) {
            return Ok(*e);
        }
        self.parse_word(group, text, &names).ok_or_else(|| GroupError::UnknownLabel {
            label: text.to_string(),
            suggestions: self.suggestions(text, &names),
        })
    }

    fn parse_word(&self, group: &Group, text: &str, names: &[(String, usize)]) -> Option<usize> {
        let chars: Vec<char> = text.chars().collect();
        let mut pos = 0;
        let mut acc = 0usize;
        let mut factors = 0;
        while pos < chars.len() {
            let c = chars[pos];
            if c.is_whitespace() || c == '*' || c == '·' {
                pos += 1;
                continue;
            }
            let rest: String = chars[pos..].iter().collect();
            let best = names
                .iter()
                .filter(|(n, _)| !n.is_empty() && rest.starts_with(n.as_str()))
                .max_by_key(|(n, _)| n.chars().count());
            let (elem, len) = match best {
                Some((n, e)) => (*e, n.chars().count()),
                None if c == '1' => (0, 1),
                None => return None,
            };
            pos += len;
            let mut exp: i64 = 1;
            if pos < chars.len() && chars[pos] == '^' {
                pos += 1;
                let paren = pos < chars.len() && chars[pos] == '(';
                if paren {
                    pos += 1;
                }
                let start = pos;
                if pos < chars.len() && (chars[pos] == '-' || chars[pos] == '+') {
                    pos += 1;
                }
                while pos < chars.len() && chars[pos].is_ascii_digit() {
                    pos += 1;
                }
                let s: String = chars[start..pos].iter().collect();
                exp = s.parse().ok()?;
                if paren {
                    if pos < chars.len() && chars[pos] == ')' {
                        pos += 1;
                    } else {
                        return None;
                    }
                }
            }
            acc = group.mul(acc, group.pow(elem, exp));
            factors += 1;
        }
        (factors > 0).then_some(acc)
    }

    fn suggestions(&self, text: &str, names: &[(String, usize)]) -> Vec<String> {
        let mut scored: Vec<(usize, &String)> = self
            .display
            .iter()
            .chain(names.iter().map(|(n, _)| n))
            .map(|cand| (levenshtein(text, cand), cand))
            .filter(|(d, _)| *d <= 2)
            .collect();
        scored.sort();
        scored.dedup_by(|a, b| a.1 == b.1);
        scored.into_iter().take(6).map(|(_, c)| c.clone()).collect()
    }
}

fn levenshtein(a: &str, b: &str) -> usize {
    let a: Vec<char> = a.chars().collect();
    let b: Vec<char> = b.chars().collect();
    let mut prev: Vec<usize> = (0..=b.len()).collect();
    for (i, ca) in a.iter().enumerate() {
        let mut cur = vec![i + 1; b.len() + 1];
        for (j, cb) in b.iter().enumerate() {
            let sub = prev[j] + usize::from(ca != cb);
            cur[j + 1] = sub.min(prev[j + 1] + 1).min(cur[j] + 1);
        }
        prev = cur;
    }
    prev[b.len()]
}
