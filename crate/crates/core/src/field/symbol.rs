//! Global symbol table.
//!
//! Symbols are interned once and referenced by a small integer id. The id
//! order doubles as the variable order used by the monomial ordering, so a
//! fixed list of common names is interned up front to keep canonical forms
//! stable from one run to the next.

use std::fmt;
use std::sync::RwLock;

use once_cell::sync::Lazy;

/// Names interned at start-up, in variable-order priority.
const PRELUDE: &[&str] = &[
    "k", "q^k", "h", "n", "q^n", "m", "q^m", "x", "q^x", "y", "z", "eta", "a", "b", "c", "d", "p",
    "N", "i", "q",
];

/// Name of the symbol reduced by `i^2 = -1`.
pub const IMAGINARY_UNIT: &str = "i";

struct Interner {
    names: Vec<String>,
    index: std::collections::HashMap<String, u32>,
}

impl Interner {
    fn new() -> Self {
        let mut interner = Interner {
            names: Vec::new(),
            index: Default::default(),
        };
        for name in PRELUDE {
            interner.intern(name);
        }
        interner
    }

    fn intern(&mut self, name: &str) -> u32 {
        if let Some(&id) = self.index.get(name) {
            return id;
        }
        let id = self.names.len() as u32;
        self.names.push(name.to_string());
        self.index.insert(name.to_string(), id);
        id
    }
}

static INTERNER: Lazy<RwLock<Interner>> = Lazy::new(|| RwLock::new(Interner::new()));

/// An interned symbol. Ordering follows interning order; `k` is first.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Var(u32);

impl Var {
    pub fn new(name: &str) -> Var {
        if let Some(&id) = INTERNER.read().unwrap().index.get(name) {
            return Var(id);
        }
        Var(INTERNER.write().unwrap().intern(name))
    }

    pub fn name(self) -> String {
        INTERNER.read().unwrap().names[self.0 as usize].clone()
    }

    pub fn id(self) -> u32 {
        self.0
    }

    /// The symbol standing for `q^self`, e.g. `q^n` for `n`.
    pub fn q_power(self) -> Var {
        Var::new(&format!("q^{}", self.name()))
    }

    /// For a companion symbol `q^s`, returns `s`.
    pub fn q_exponent(self) -> Option<Var> {
        let name = self.name();
        name.strip_prefix("q^").map(Var::new)
    }

    pub fn is_imaginary_unit(self) -> bool {
        self == Var::new(IMAGINARY_UNIT)
    }
}

impl fmt::Debug for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}
