//! Head-percolation rule tables.
//!
//! File format, one rule per line:
//!
//! ```text
//! <label> <l2r|r2l> <child-label> <child-label> ...
//! DEFAULT <l2r|r2l> [<child-label> ...]
//! ```
//!
//! Blank lines and lines starting with `#` are ignored. The `DEFAULT` line
//! is required and applies to labels without a rule of their own.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    LeftToRight,
    RightToLeft,
}

impl FromStr for Direction {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "l2r" => Ok(Direction::LeftToRight),
            "r2l" => Ok(Direction::RightToLeft),
            other => Err(format!("direction must be l2r or r2l, got `{}`", other)),
        }
    }
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Direction::LeftToRight => "l2r",
            Direction::RightToLeft => "r2l",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HeadRule {
    pub direction: Direction,
    pub priority: Vec<String>,
}

impl HeadRule {
    pub fn new(direction: Direction, priority: &[&str]) -> Self {
        HeadRule {
            direction,
            priority: priority.iter().map(|s| s.to_string()).collect(),
        }
    }

    /// Index of the head child: the first priority label found scanning in
    /// the rule's direction, else the first child in that direction.
    pub fn choose(&self, children: &[&str]) -> usize {
        assert!(!children.is_empty(), "head choice over no children");
        let order: Vec<usize> = match self.direction {
            Direction::LeftToRight => (0..children.len()).collect(),
            Direction::RightToLeft => (0..children.len()).rev().collect(),
        };
        for wanted in &self.priority {
            if let Some(&i) = order.iter().find(|&&i| children[i] == wanted) {
                return i;
            }
        }
        order[0]
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HeadRuleTable {
    rules: HashMap<String, HeadRule>,
    default: HeadRule,
}

impl HeadRuleTable {
    pub fn new(default: HeadRule) -> Self {
        HeadRuleTable {
            rules: HashMap::new(),
            default,
        }
    }

    pub fn insert(&mut self, label: impl Into<String>, rule: HeadRule) {
        self.rules.insert(label.into(), rule);
    }

    pub fn rule(&self, label: &str) -> &HeadRule {
        self.rules.get(label).unwrap_or(&self.default)
    }

    pub fn default_rule(&self) -> &HeadRule {
        &self.default
    }

    pub fn choose(&self, label: &str, children: &[&str]) -> usize {
        self.rule(label).choose(children)
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut rules = HashMap::new();
        let mut default = None;
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let err = |message: String| Error::HeadRules { line, message };
            let trimmed = raw.trim();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            let mut fields = trimmed.split_whitespace();
            let label = fields.next().expect("non-empty line");
            let direction: Direction = fields
                .next()
                .ok_or_else(|| err(format!("rule for {} has no direction", label)))?
                .parse()
                .map_err(err)?;
            let rule = HeadRule {
                direction,
                priority: fields.map(str::to_string).collect(),
            };
            if label == "DEFAULT" {
                if default.replace(rule).is_some() {
                    return Err(err("duplicate DEFAULT rule".into()));
                }
            } else if rules.insert(label.to_string(), rule).is_some() {
                return Err(err(format!("duplicate rule for {}", label)));
            }
        }
        let default = default.ok_or(Error::HeadRules {
            line: text.lines().count().max(1),
            message: "missing DEFAULT rule".into(),
        })?;
        Ok(HeadRuleTable { rules, default })
    }
}

impl fmt::Display for HeadRuleTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut labels: Vec<&String> = self.rules.keys().collect();
        labels.sort();
        let line = |f: &mut fmt::Formatter<'_>, label: &str, rule: &HeadRule| {
            write!(f, "{} {}", label, rule.direction)?;
            for p in &rule.priority {
                write!(f, " {}", p)?;
            }
            writeln!(f)
        };
        for label in labels {
            line(f, label, &self.rules[label])?;
        }
        line(f, "DEFAULT", &self.default)
    }
}
