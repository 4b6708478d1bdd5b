//! Penn-Treebank bracketed trees.
//!
//! Pre-terminals `(TAG word)` become words of the [`Sentence`]; every other
//! bracket becomes a phrase. A top bracket without a label wrapping a single
//! tree, as in `( (S ...) )`, is unwrapped.

use crate::error::{Error, Result};
use crate::tree::{ConstTree, Node, Phrase, Sentence};

#[derive(Debug, PartialEq)]
enum Token<'a> {
    Open(usize),
    Close(usize),
    Atom(&'a str, usize),
}

fn tokenize(text: &str) -> Vec<Token<'_>> {
    let mut out = Vec::new();
    let mut atom_start = None;
    for (i, c) in text.char_indices() {
        let boundary = c == '(' || c == ')' || c.is_whitespace();
        if boundary {
            if let Some(s) = atom_start.take() {
                out.push(Token::Atom(&text[s..i], s));
            }
            match c {
                '(' => out.push(Token::Open(i)),
                ')' => out.push(Token::Close(i)),
                _ => {}
            }
        } else if atom_start.is_none() {
            atom_start = Some(i);
        }
    }
    if let Some(s) = atom_start {
        out.push(Token::Atom(&text[s..], s));
    }
    out
}

enum Sexp<'a> {
    Atom(&'a str, usize),
    List(Vec<Sexp<'a>>, usize),
}

struct Reader<'a> {
    tokens: Vec<Token<'a>>,
    pos: usize,
    end: usize,
}

impl<'a> Reader<'a> {
    /// Parses a list whose `(` was just consumed at `open`.
    fn list(&mut self, open: usize) -> Result<Sexp<'a>> {
        let mut items = Vec::new();
        loop {
            match self.tokens.get(self.pos) {
                None => return Err(Error::ptb(self.end, "unbalanced brackets")),
                Some(&Token::Close(_)) => {
                    self.pos += 1;
                    return Ok(Sexp::List(items, open));
                }
                Some(&Token::Open(at)) => {
                    self.pos += 1;
                    items.push(self.list(at)?);
                }
                Some(&Token::Atom(a, at)) => {
                    self.pos += 1;
                    items.push(Sexp::Atom(a, at));
                }
            }
        }
    }
}

struct Builder {
    tokens: Vec<String>,
    tags: Vec<String>,
}

impl Builder {
    fn node(&mut self, sexp: &Sexp<'_>) -> Result<Node> {
        let (items, open) = match sexp {
            Sexp::Atom(_, at) => return Err(Error::ptb(*at, "stray tokens")),
            Sexp::List(items, open) => (items, *open),
        };
        let label = match items.first() {
            Some(Sexp::Atom(l, _)) => *l,
            _ => return Err(Error::ptb(open, "empty label")),
        };
        let rest = &items[1..];
        match rest {
            [] => Err(Error::ptb(open, "bracket without children")),
            [Sexp::Atom(word, _)] => {
                self.tokens.push(word.to_string());
                self.tags.push(label.to_string());
                Ok(Node::Leaf(self.tokens.len() - 1))
            }
            _ => {
                let mut children = Vec::with_capacity(rest.len());
                for child in rest {
                    children.push(self.node(child)?);
                }
                Ok(Node::Phrase(Phrase::new(label, children)))
            }
        }
    }
}

/// Every tree in `text`, one or several per line or pretty-printed.
pub fn read_ptb(text: &str) -> Result<Vec<(Sentence, ConstTree)>> {
    let mut reader = Reader {
        tokens: tokenize(text),
        pos: 0,
        end: text.len(),
    };
    let mut out = Vec::new();
    while let Some(tok) = reader.tokens.get(reader.pos) {
        let open = match *tok {
            Token::Open(at) => at,
            Token::Close(at) => return Err(Error::ptb(at, "unbalanced brackets")),
            Token::Atom(_, at) => return Err(Error::ptb(at, "stray tokens")),
        };
        reader.pos += 1;
        let mut sexp = reader.list(open)?;
        if let Sexp::List(items, _) = &mut sexp {
            if items.len() == 1 && matches!(items[0], Sexp::List(..)) {
                sexp = items.pop().unwrap();
            }
        }
        let mut builder = Builder {
            tokens: Vec::new(),
            tags: Vec::new(),
        };
        let root = builder.node(&sexp)?;
        let tree = ConstTree::new(root).map_err(|e| Error::ptb(open, e.to_string()))?;
        out.push((Sentence::new(builder.tokens, builder.tags)?, tree));
    }
    Ok(out)
}

fn write_node(node: &Node, sentence: &Sentence, out: &mut String) {
    match node {
        Node::Leaf(p) => {
            out.push('(');
            out.push_str(sentence.tag(p + 1));
            out.push(' ');
            out.push_str(sentence.token(p + 1));
            out.push(')');
        }
        Node::Phrase(ph) => {
            out.push('(');
            out.push_str(&ph.label);
            for c in &ph.children {
                out.push(' ');
                write_node(c, sentence, out);
            }
            out.push(')');
        }
    }
}

/// One tree on one line, without a trailing newline.
pub fn write_tree(sentence: &Sentence, tree: &ConstTree) -> String {
    assert_eq!(
        sentence.len(),
        tree.len(),
        "sentence and tree lengths differ"
    );
    let mut out = String::new();
    write_node(tree.root(), sentence, &mut out);
    out
}

/// One tree per line.
pub fn write_ptb(corpus: &[(Sentence, ConstTree)]) -> String {
    let mut out = String::new();
    for (s, t) in corpus {
        out.push_str(&write_tree(s, t));
        out.push('\n');
    }
    out
}
