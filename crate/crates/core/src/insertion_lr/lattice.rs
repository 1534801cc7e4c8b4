use crate::tableaux::Word;

/// The three lattice conditions on a word.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LatticeFlags {
    /// Every prefix has at least as many `i` as `i + 1`.
    pub is_lattice: bool,
    /// Every prefix has at least as many `i` as `i - 1`, up to the maximum
    /// letter.
    pub is_reverse_lattice: bool,
    /// Reverse lattice and contains a 1.
    pub is_regular_reverse: bool,
}

pub fn lattice_predicates(w: &Word) -> LatticeFlags {
    let is_reverse_lattice = is_reverse_lattice(&w.0);
    LatticeFlags {
        is_lattice: is_lattice(&w.0),
        is_reverse_lattice,
        is_regular_reverse: is_reverse_lattice && w.0.contains(&1),
    }
}

pub(crate) fn is_lattice(w: &[u32]) -> bool {
    let max = w.iter().copied().max().unwrap_or(0) as usize;
    let mut counts = vec![0u32; max + 2];
    for &x in w {
        let x = x as usize;
        counts[x] += 1;
        if x > 1 && counts[x] > counts[x - 1] {
            return false;
        }
    }
    true
}

pub(crate) fn is_reverse_lattice(w: &[u32]) -> bool {
    let max = w.iter().copied().max().unwrap_or(0) as usize;
    let mut counts = vec![0u32; max + 2];
    for &x in w {
        let x = x as usize;
        counts[x] += 1;
        if x < max && counts[x] > counts[x + 1] {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn flags(s: &str) -> LatticeFlags {
        lattice_predicates(&Word(s.bytes().map(|b| (b - b'0') as u32).collect()))
    }

    #[test]
    fn small_words() {
        assert!(flags("1122").is_lattice);
        assert!(!flags("1122").is_reverse_lattice);
        assert!(flags("2211").is_regular_reverse);
        assert!(!flags("21").is_lattice);
        assert!(flags("").is_lattice && flags("").is_reverse_lattice);
        assert!(!flags("").is_regular_reverse);
        assert!(flags("22").is_reverse_lattice && !flags("22").is_regular_reverse);
        assert!(!flags("1312").is_lattice);
        assert!(flags("112213").is_lattice);
    }

    /// Brute force over prefixes, straight from the definitions.
    fn oracle(w: &[u32]) -> (bool, bool) {
        let m = w.iter().copied().max().unwrap_or(0);
        let count = |p: &[u32], i: u32| p.iter().filter(|&&x| x == i).count();
        let lat = (0..=w.len()).all(|k| (1..m).all(|i| count(&w[..k], i) >= count(&w[..k], i + 1)));
        let rev = (0..=w.len()).all(|k| (2..=m).all(|i| count(&w[..k], i) >= count(&w[..k], i - 1)));
        (lat, rev)
    }

    #[test]
    fn agrees_with_prefix_counts() {
        for len in 0..=6u32 {
            for code in 0..3u32.pow(len) {
                let w: Vec<u32> = (0..len).map(|i| code / 3u32.pow(i) % 3 + 1).collect();
                let (lat, rev) = oracle(&w);
                assert_eq!(is_lattice(&w), lat, "{w:?}");
                assert_eq!(is_reverse_lattice(&w), rev, "{w:?}");
            }
        }
    }
}
