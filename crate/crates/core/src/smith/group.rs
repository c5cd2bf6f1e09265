use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use serde::ser::{SerializeSeq, SerializeStruct};
use serde::{Serialize, Serializer};

/// A finitely generated abelian group `Z^r + Z_{d1} + ... + Z_{dk}` with
/// `1 < d1 | d2 | ... | dk`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct AbGroup {
    pub free_rank: usize,
    pub torsion: Vec<BigUint>,
}

impl AbGroup {
    pub fn trivial() -> Self {
        Self::default()
    }

    pub fn free(rank: usize) -> Self {
        Self { free_rank: rank, torsion: Vec::new() }
    }

    /// Builds the group `Z^r + (+)_i Z_{orders[i]}` from arbitrary cyclic
    /// orders. Orders `0` add free rank, orders `1` vanish.
    pub fn from_cyclic_orders<I>(free_rank: usize, orders: I) -> Self
    where
        I: IntoIterator<Item = BigUint>,
    {
        let mut free_rank = free_rank;
        let mut d: Vec<BigUint> = Vec::new();
        for o in orders {
            if o.is_zero() {
                free_rank += 1;
            } else if !o.is_one() {
                d.push(o);
            }
        }
        // pairwise (gcd, lcm) preserves the group and leaves a divisibility chain
        for i in 0..d.len() {
            for j in i + 1..d.len() {
                let g = d[i].gcd(&d[j]);
                let l = &d[i] / &g * &d[j];
                d[i] = g;
                d[j] = l;
            }
        }
        d.retain(|x| !x.is_one());
        Self { free_rank, torsion: d }
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    /// Prime-power orders of the cyclic summands, sorted. Together with the
    /// free rank these determine the group up to isomorphism.
    pub fn elementary_divisors(&self) -> Vec<BigUint> {
        let mut out = Vec::new();
        for d in &self.torsion {
            out.extend(prime_power_parts(d));
        }
        out.sort();
        out
    }

    /// `self (+) other`, normalized through prime-power decomposition.
    pub fn direct_sum(&self, other: &Self) -> Self {
        let mut parts = self.elementary_divisors();
        parts.extend(other.elementary_divisors());
        Self::from_elementary_divisors(self.free_rank + other.free_rank, parts)
    }

    /// Reassembles invariant factors from prime-power orders: the largest
    /// power of each prime goes into the last factor, and so on.
    pub fn from_elementary_divisors(free_rank: usize, mut parts: Vec<BigUint>) -> Self {
        parts.retain(|p| !p.is_one() && !p.is_zero());
        let mut by_prime: Vec<(BigUint, Vec<BigUint>)> = Vec::new();
        for q in parts {
            let p = smallest_prime_factor(&q);
            match by_prime.iter_mut().find(|(bp, _)| *bp == p) {
                Some((_, v)) => v.push(q),
                None => by_prime.push((p, vec![q])),
            }
        }
        let k = by_prime.iter().map(|(_, v)| v.len()).max().unwrap_or(0);
        let mut factors = vec![BigUint::one(); k];
        for (_, mut powers) in by_prime {
            powers.sort();
            let offset = k - powers.len();
            for (i, q) in powers.into_iter().enumerate() {
                factors[offset + i] *= q;
            }
        }
        Self { free_rank, torsion: factors }
    }

    /// Isomorphism test through elementary divisors.
    pub fn is_isomorphic(&self, other: &Self) -> bool {
        self.free_rank == other.free_rank
            && self.elementary_divisors() == other.elementary_divisors()
    }
}

fn smallest_prime_factor(n: &BigUint) -> BigUint {
    let mut p = BigUint::from(2u32);
    while &p * &p <= *n {
        if (n % &p).is_zero() {
            return p;
        }
        p += 1u32;
    }
    n.clone()
}

fn prime_power_parts(n: &BigUint) -> Vec<BigUint> {
    let mut out = Vec::new();
    let mut rest = n.clone();
    while !rest.is_one() {
        let p = smallest_prime_factor(&rest);
        let mut q = BigUint::one();
        while (&rest % &p).is_zero() {
            rest /= &p;
            q *= &p;
        }
        out.push(q);
    }
    out
}

impl fmt::Display for AbGroup {
    /// Table notation, e.g. `Z^8 + Z_2^4 + Z_8^2`; the trivial group is `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = Vec::new();
        match self.free_rank {
            0 => {}
            1 => terms.push("Z".to_string()),
            r => terms.push(format!("Z^{r}")),
        }
        let mut i = 0;
        while i < self.torsion.len() {
            let d = &self.torsion[i];
            let run = self.torsion[i..].iter().take_while(|x| *x == d).count();
            terms.push(if run == 1 { format!("Z_{d}") } else { format!("Z_{d}^{run}") });
            i += run;
        }
        if terms.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&terms.join(" + "))
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("cannot parse group term `{0}`")]
pub struct ParseGroupError(pub String);

impl FromStr for AbGroup {
    type Err = ParseGroupError;

    /// Accepts the [`Display`](fmt::Display) notation with terms in any order.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s == "0" {
            return Ok(Self::trivial());
        }
        let mut free_rank = 0;
        let mut orders = Vec::new();
        for term in s.split('+').map(str::trim) {
            let bad = || ParseGroupError(term.to_string());
            let (base, exp) = match term.split_once('^') {
                Some((b, e)) => (b, e.parse::<usize>().map_err(|_| bad())?),
                None => (term, 1),
            };
            if base == "Z" {
                free_rank += exp;
            } else if let Some(d) = base.strip_prefix("Z_") {
                let d: BigUint = d.parse().map_err(|_| bad())?;
                if d.is_zero() {
                    return Err(bad());
                }
                orders.extend(std::iter::repeat_n(d, exp));
            } else {
                return Err(bad());
            }
        }
        Ok(Self::from_cyclic_orders(free_rank, orders))
    }
}

/// Serializes a big natural number as a JSON number when it fits in `u64`,
/// and as a decimal string otherwise.
struct JsonNat<'a>(pub &'a BigUint);

impl Serialize for JsonNat<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self.0.to_u64() {
            Some(v) => s.serialize_u64(v),
            None => s.serialize_str(&self.0.to_string()),
        }
    }
}

impl Serialize for AbGroup {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        struct Torsion<'a>(&'a [BigUint]);
        impl Serialize for Torsion<'_> {
            fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
                let mut seq = s.serialize_seq(Some(self.0.len()))?;
                for d in self.0 {
                    seq.serialize_element(&JsonNat(d))?;
                }
                seq.end()
            }
        }
        let mut st = s.serialize_struct("AbGroup", 2)?;
        st.serialize_field("free_rank", &self.free_rank)?;
        st.serialize_field("torsion", &Torsion(&self.torsion))?;
        st.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(s: &str) -> AbGroup {
        s.parse().unwrap()
    }

    fn nats(v: &[u64]) -> Vec<BigUint> {
        v.iter().map(|&x| BigUint::from(x)).collect()
    }

    #[test]
    fn normalizes_to_invariant_factors() {
        let x = AbGroup::from_cyclic_orders(0, nats(&[2, 3, 1, 4]));
        assert_eq!(x.torsion, nats(&[2, 12]));
        let y = AbGroup::from_cyclic_orders(1, nats(&[0, 8, 2, 2, 8, 2, 2]));
        assert_eq!(y.free_rank, 2);
        assert_eq!(y.to_string(), "Z^2 + Z_2^4 + Z_8^2");
    }

    #[test]
    fn display_parse_round_trip() {
        for s in ["0", "Z", "Z^4 + Z_2", "Z^24 + Z_2^2 + Z_4^3", "Z_3", "Z^160 + Z_2^15 + Z_4"] {
            assert_eq!(g(s).to_string(), s);
        }
        assert_eq!(g("Z_2 + Z^3"), g("Z^3 + Z_2"));
        assert!("Z_0".parse::<AbGroup>().is_err());
        assert!("Q^2".parse::<AbGroup>().is_err());
    }

    #[test]
    fn direct_sum_and_isomorphism() {
        let a = g("Z^4 + Z_3");
        let b = g("Z^5");
        assert_eq!(a.direct_sum(&b), g("Z^9 + Z_3"));
        let c = g("Z_2 + Z_3");
        assert_eq!(c, g("Z_6"));
        assert!(g("Z_4 + Z_9").is_isomorphic(&g("Z_36")));
        assert!(!g("Z_2 + Z_2").is_isomorphic(&g("Z_4")));
        let s = g("Z^44 + Z_2^4").direct_sum(&g("Z^116 + Z_2^11 + Z_4"));
        assert_eq!(s, g("Z^160 + Z_2^15 + Z_4"));
    }

    #[test]
    fn json_shape() {
        let j = serde_json::to_string(&g("Z^2 + Z_2^2")).unwrap();
        assert_eq!(j, r#"{"free_rank":2,"torsion":[2,2]}"#);
    }
}
