//! Interned parameter symbols.
//!
//! Symbols are interned into a process-wide registry; the registry is
//! pre-seeded with every invariant name that occurs in the generating
//! tables, in a fixed canonical order. Registry order drives the
//! graded-lexicographic monomial ordering, so displays are deterministic.

use once_cell::sync::Lazy;
use std::collections::HashMap;
use std::sync::RwLock;

/// An interned symbol. Ordered by registry index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Sym(u32);

struct SymData {
    name: String,
    display: String,
    latex: String,
}

struct Interner {
    by_name: HashMap<String, u32>,
    data: Vec<SymData>,
}

/// `(name, display, latex)` for every invariant used by the bundled tables.
/// Names are the JSON identifiers; display/latex follow the usual notation.
const SEED: &[(&str, &str, &str)] = &[
    ("r", "r", "r"),
    ("m", "m", "m"),
    ("alpha", "alpha", "\\alpha"),
    ("beta", "beta", "\\beta"),
    ("ell", "l", "\\ell"),
    ("p25", "p25", "p_{(2,5)}"),
    ("p34", "p34", "p_{(3,4)}"),
    ("k", "k", "k"),
    ("b", "b", "b"),
    ("nprime", "n'", "n'"),
    ("n", "n", "n"),
    ("a", "a", "a"),
    ("N", "N", "N"),
    ("Nprime", "N'", "N'"),
    ("gD", "g(D)", "g(D)"),
    ("gDq", "g(D/y)", "g(D/\\gamma)"),
    ("gG", "g(G)", "g(G)"),
    ("gGq", "g(G/y)", "g(G/\\gamma)"),
    ("gF1", "g(F1)", "g(F_1)"),
    ("gF2", "g(F2)", "g(F_2)"),
    ("gF1q", "g(F1/y)", "g(F_1/\\gamma)"),
    ("gF2q", "g(F2/y)", "g(F_2/\\gamma)"),
    ("gC", "g(C)", "g(C)"),
    ("h", "h", "h"),
    ("n1", "n1", "n_1"),
    ("n2", "n2", "n_2"),
    ("w", "w", "w"),
];

static INTERNER: Lazy<RwLock<Interner>> = Lazy::new(|| {
    let mut by_name = HashMap::new();
    let mut data = Vec::new();
    for (name, display, latex) in SEED {
        by_name.insert(name.to_string(), data.len() as u32);
        data.push(SymData {
            name: name.to_string(),
            display: display.to_string(),
            latex: latex.to_string(),
        });
    }
    RwLock::new(Interner { by_name, data })
});

/// Intern `name`, registering it (display = latex = name) if new.
pub fn sym(name: &str) -> Sym {
    {
        let guard = INTERNER.read().unwrap();
        if let Some(&id) = guard.by_name.get(name) {
            return Sym(id);
        }
    }
    let mut guard = INTERNER.write().unwrap();
    if let Some(&id) = guard.by_name.get(name) {
        return Sym(id);
    }
    let id = guard.data.len() as u32;
    guard.by_name.insert(name.to_string(), id);
    guard.data.push(SymData {
        name: name.to_string(),
        display: name.to_string(),
        latex: name.to_string(),
    });
    Sym(id)
}

impl Sym {
    pub fn name(self) -> String {
        INTERNER.read().unwrap().data[self.0 as usize].name.clone()
    }

    pub fn display(self) -> String {
        INTERNER.read().unwrap().data[self.0 as usize]
            .display
            .clone()
    }

    pub fn latex(self) -> String {
        INTERNER.read().unwrap().data[self.0 as usize].latex.clone()
    }
}

impl std::fmt::Display for Sym {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.display())
    }
}
