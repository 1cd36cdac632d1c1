use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

/// Index of a generator inside its alphabet.
pub type Sym = u8;

/// Monomial of the free algebra.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Word(pub Vec<Sym>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn single(s: Sym) -> Self {
        Word(alloc::vec![s])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[Sym] {
        &self.0
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.len() + other.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn reversed(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }

    /// `prefix · middle · suffix`.
    pub fn splice(prefix: &[Sym], middle: &[Sym], suffix: &[Sym]) -> Word {
        let mut v = Vec::with_capacity(prefix.len() + middle.len() + suffix.len());
        v.extend_from_slice(prefix);
        v.extend_from_slice(middle);
        v.extend_from_slice(suffix);
        Word(v)
    }
}

impl From<&[Sym]> for Word {
    fn from(s: &[Sym]) -> Self {
        Word(s.to_vec())
    }
}

/// Named generators; a symbol is its position in the list.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Alphabet {
    names: Vec<String>,
}

impl Alphabet {
    pub const fn empty() -> Self {
        Alphabet { names: Vec::new() }
    }

    pub fn new<I, S>(names: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        assert!(names.len() < usize::from(Sym::MAX), "alphabet too large");
        Alphabet { names }
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, s: Sym) -> &str {
        &self.names[usize::from(s)]
    }

    pub fn sym(&self, name: &str) -> Option<Sym> {
        self.names
            .iter()
            .position(|n| n == name)
            .map(|p| Sym::try_from(p).expect("alphabet fits in Sym"))
    }

    pub fn syms(&self) -> impl Iterator<Item = Sym> {
        (0..self.names.len()).map(|p| Sym::try_from(p).expect("alphabet fits in Sym"))
    }

    /// Words are printed with letters joined by `*`; the empty word is `1`.
    pub fn show(&self, w: &Word) -> WordDisplay<'_> {
        WordDisplay { alpha: self, word: w.clone(), sep: "*" }
    }

    pub fn show_sep<'a>(&'a self, w: &Word, sep: &'static str) -> WordDisplay<'a> {
        WordDisplay { alpha: self, word: w.clone(), sep }
    }
}

pub struct WordDisplay<'a> {
    alpha: &'a Alphabet,
    word: Word,
    sep: &'static str,
}

impl fmt::Display for WordDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.word.is_empty() {
            return f.write_str("1");
        }
        for (k, &s) in self.word.0.iter().enumerate() {
            if k > 0 {
                f.write_str(self.sep)?;
            }
            f.write_str(self.alpha.name(s))?;
        }
        Ok(())
    }
}
