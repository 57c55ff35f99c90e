//! Shared search options, certificate modes and three-valued verdicts.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

/// Options for enumerative searches (isomorphism hunts, splitter hunts,
/// surjection hunts, closure sweeps).
#[derive(Clone, Copy, Debug, Serialize)]
pub struct SearchOpts {
    /// Master seed; every operation derives its own stream from it.
    pub seed: u64,
    /// Over F_p, enumerate whole linear families whenever p^dim stays at or
    /// below `enum_cap`. Otherwise (and always over Q) fall back to a
    /// spanning set plus seeded random combinations.
    pub exhaustive: bool,
    /// Number of random combinations tried in sampled mode.
    pub samples: usize,
    /// Bound on the size of any single exhaustive enumeration.
    pub enum_cap: u64,
}

impl Default for SearchOpts {
    fn default() -> Self {
        SearchOpts {
            seed: 0,
            exhaustive: false,
            samples: 32,
            enum_cap: 1 << 20,
        }
    }
}

impl SearchOpts {
    pub fn exhaustive_with_seed(seed: u64) -> Self {
        SearchOpts {
            seed,
            exhaustive: true,
            ..Default::default()
        }
    }

    /// Independent RNG stream for one named operation.
    pub fn rng(&self, op: &str) -> ChaCha8Rng {
        let mut h: u64 = 0xcbf29ce484222325;
        for b in op.bytes() {
            h ^= b as u64;
            h = h.wrapping_mul(0x100000001b3);
        }
        ChaCha8Rng::seed_from_u64(self.seed ^ h)
    }

    /// Whether p^dim fits under the enumeration cap.
    pub fn fits_cap(&self, p: u32, dim: usize) -> bool {
        let mut total: u128 = 1;
        for _ in 0..dim {
            total = total.saturating_mul(p as u128);
            if total > self.enum_cap as u128 {
                return false;
            }
        }
        true
    }
}

/// Options controlling the wide-closure fixed point search.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct ClosureOptions {
    pub search: SearchOpts,
    /// Morphisms are enumerated between direct sums of at most this many
    /// members.
    pub summand_bound: usize,
    /// Give up (reporting no fixed point) after this many rounds.
    pub max_rounds: usize,
}

impl Default for ClosureOptions {
    fn default() -> Self {
        ClosureOptions {
            search: SearchOpts::default(),
            summand_bound: 2,
            max_rounds: 32,
        }
    }
}

/// How a result was certified.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CertificateMode {
    /// Every relevant family was enumerated completely.
    Exhaustive,
    /// Some search used a spanning set plus random samples.
    Sampled,
}

impl CertificateMode {
    pub fn meet(self, other: CertificateMode) -> CertificateMode {
        if self == CertificateMode::Exhaustive && other == CertificateMode::Exhaustive {
            CertificateMode::Exhaustive
        } else {
            CertificateMode::Sampled
        }
    }
}

/// Three-valued logic for decision procedures that may be unable to certify
/// either answer.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Verdict {
    True,
    False,
    Unknown,
}

impl Verdict {
    pub fn from_bool(b: bool) -> Verdict {
        if b {
            Verdict::True
        } else {
            Verdict::False
        }
    }

    pub fn and(self, other: Verdict) -> Verdict {
        match (self, other) {
            (Verdict::False, _) | (_, Verdict::False) => Verdict::False,
            (Verdict::True, Verdict::True) => Verdict::True,
            _ => Verdict::Unknown,
        }
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            Verdict::True => "true",
            Verdict::False => "false",
            Verdict::Unknown => "unknown",
        }
    }

    pub fn is_true(&self) -> bool {
        *self == Verdict::True
    }

    pub fn is_false(&self) -> bool {
        *self == Verdict::False
    }
}

impl serde::Serialize for Verdict {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn verdict_and_table() {
        use Verdict::*;
        assert_eq!(True.and(True), True);
        assert_eq!(True.and(Unknown), Unknown);
        assert_eq!(Unknown.and(False), False);
        assert_eq!(Unknown.and(Unknown), Unknown);
    }

    #[test]
    fn rng_streams_are_independent_and_stable() {
        let o = SearchOpts::default();
        use rand::RngCore;
        let a1 = o.rng("alpha").next_u64();
        let a2 = o.rng("alpha").next_u64();
        let b = o.rng("beta").next_u64();
        assert_eq!(a1, a2);
        assert_ne!(a1, b);
    }

    #[test]
    fn cap_check() {
        let o = SearchOpts {
            enum_cap: 1024,
            ..Default::default()
        };
        assert!(o.fits_cap(2, 10));
        assert!(!o.fits_cap(2, 11));
        assert!(o.fits_cap(65521, 1));
    }
}
