//! Finite-dimensional Lie algebras given by structure constants.
//!
//! The loader completes antisymmetry from the i<j entries, rejects
//! inconsistent duplicates, and validates the Jacobi identity exactly,
//! naming the offending triple on failure.

use crate::error::{Error, Result};
use crate::rational::Coeff;
use num::Zero;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::path::Path;
use std::str::FromStr;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LieAlgebra {
    names: Vec<String>,
    // canonical storage: [b_i, b_j] for i < j only
    brackets: BTreeMap<(usize, usize), BTreeMap<usize, Coeff>>,
}

/// Wire format: `{"dim": n, "names": [...], "brackets": [{"i":, "j":,
/// "coeffs": {"k": "p/q"}}]}`. Only i<j pairs need to be listed.
#[derive(Serialize, Deserialize)]
struct LieConfig {
    dim: usize,
    names: Vec<String>,
    brackets: Vec<BracketConfig>,
}

#[derive(Serialize, Deserialize)]
struct BracketConfig {
    i: usize,
    j: usize,
    coeffs: BTreeMap<String, String>,
}

impl LieAlgebra {
    /// Builds and validates from raw entries ([b_i, b_j] = Σ c_k b_k);
    /// entries with i > j are folded by antisymmetry and inconsistent
    /// duplicates are rejected.
    pub fn new(
        names: Vec<String>,
        entries: Vec<(usize, usize, Vec<(usize, Coeff)>)>,
    ) -> Result<Self> {
        let dim = names.len();
        for (k, name) in names.iter().enumerate() {
            if names[..k].contains(name) {
                return Err(Error::Config(format!("duplicate basis name '{name}'")));
            }
        }
        let mut brackets: BTreeMap<(usize, usize), BTreeMap<usize, Coeff>> = BTreeMap::new();
        for (i, j, coeffs) in entries {
            if i >= dim || j >= dim || coeffs.iter().any(|&(k, _)| k >= dim) {
                return Err(Error::Config(format!("bracket ({i},{j}) uses an index >= dim {dim}")));
            }
            let mut value: BTreeMap<usize, Coeff> = BTreeMap::new();
            for (k, c) in coeffs {
                if !c.is_zero() {
                    let entry = value.entry(k).or_insert_with(Coeff::zero);
                    *entry += c;
                }
            }
            value.retain(|_, c| !c.is_zero());
            if i == j {
                if !value.is_empty() {
                    return Err(Error::Antisymmetry { i, j });
                }
                continue;
            }
            let (key, value) = if i < j {
                ((i, j), value)
            } else {
                ((j, i), value.into_iter().map(|(k, c)| (k, -c)).collect())
            };
            match brackets.get(&key) {
                None => {
                    brackets.insert(key, value);
                }
                Some(existing) if *existing == value => {}
                Some(_) => return Err(Error::Antisymmetry { i, j }),
            }
        }
        brackets.retain(|_, v| !v.is_empty());
        let lie = LieAlgebra { names, brackets };
        lie.validate_jacobi()?;
        Ok(lie)
    }

    pub fn dim(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    /// [b_i, b_j] as sparse coordinates, any index order.
    pub fn bracket(&self, i: usize, j: usize) -> Vec<(usize, Coeff)> {
        if i == j {
            return Vec::new();
        }
        let (key, flip) = if i < j { ((i, j), false) } else { ((j, i), true) };
        match self.brackets.get(&key) {
            None => Vec::new(),
            Some(coeffs) => coeffs
                .iter()
                .map(|(&k, c)| (k, if flip { -c.clone() } else { c.clone() }))
                .collect(),
        }
    }

    fn bracket_vectors(&self, u: &[Coeff], v: &[Coeff]) -> Vec<Coeff> {
        let mut out = vec![Coeff::zero(); self.dim()];
        for (i, a) in u.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in v.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                for (k, c) in self.bracket(i, j) {
                    out[k] += a * b * c;
                }
            }
        }
        out
    }

    fn validate_jacobi(&self) -> Result<()> {
        let dim = self.dim();
        let basis = |i: usize| -> Vec<Coeff> {
            let mut v = vec![Coeff::zero(); dim];
            v[i] = num::One::one();
            v
        };
        for i in 0..dim {
            for j in i + 1..dim {
                for k in j + 1..dim {
                    let (bi, bj, bk) = (basis(i), basis(j), basis(k));
                    let mut total = vec![Coeff::zero(); dim];
                    for (first, second, third) in
                        [(&bi, &bj, &bk), (&bj, &bk, &bi), (&bk, &bi, &bj)]
                    {
                        let inner = self.bracket_vectors(first, second);
                        for (slot, value) in
                            total.iter_mut().zip(self.bracket_vectors(&inner, third))
                        {
                            *slot += value;
                        }
                    }
                    if total.iter().any(|c| !c.is_zero()) {
                        return Err(Error::Jacobi { i, j, k });
                    }
                }
            }
        }
        Ok(())
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let config: LieConfig = serde_json::from_str(text)?;
        if config.names.len() != config.dim {
            return Err(Error::Config(format!(
                "dim is {} but {} names were given",
                config.dim,
                config.names.len()
            )));
        }
        let mut entries = Vec::new();
        for b in config.brackets {
            let mut coeffs = Vec::new();
            for (k, c) in b.coeffs {
                let k: usize = k
                    .parse()
                    .map_err(|_| Error::Config(format!("bad basis index '{k}'")))?;
                let c = Coeff::from_str(&c)
                    .map_err(|e| Error::Config(format!("bad coefficient '{c}': {e}")))?;
                coeffs.push((k, c));
            }
            entries.push((b.i, b.j, coeffs));
        }
        LieAlgebra::new(config.names, entries)
    }

    pub fn from_path(path: impl AsRef<Path>) -> Result<Self> {
        LieAlgebra::from_json(&std::fs::read_to_string(path)?)
    }

    /// All brackets zero.
    pub fn abelian(dim: usize) -> Self {
        let names = ["x", "y", "z", "w", "v"];
        let names: Vec<String> = (0..dim)
            .map(|i| names.get(i).map_or_else(|| format!("x{i}"), |s| s.to_string()))
            .collect();
        LieAlgebra::new(names, Vec::new()).expect("abelian is a Lie algebra")
    }

    /// x < y < z with [x, y] = z and z central.
    pub fn heisenberg() -> Self {
        LieAlgebra::new(
            vec!["x".into(), "y".into(), "z".into()],
            vec![(0, 1, vec![(2, num::One::one())])],
        )
        .expect("heisenberg is a Lie algebra")
    }

    /// e < h < f with [e,f] = h, [h,e] = 2e, [h,f] = −2f.
    pub fn sl2() -> Self {
        LieAlgebra::new(
            vec!["e".into(), "h".into(), "f".into()],
            vec![
                (0, 2, vec![(1, crate::rational::q_int(1))]),
                (1, 0, vec![(0, crate::rational::q_int(2))]),
                (1, 2, vec![(2, crate::rational::q_int(-2))]),
            ],
        )
        .expect("sl2 is a Lie algebra")
    }

    /// The 2-dimensional nonabelian algebra x < y with [x, y] = y.
    pub fn nonabelian2() -> Self {
        LieAlgebra::new(
            vec!["x".into(), "y".into()],
            vec![(0, 1, vec![(1, num::One::one())])],
        )
        .expect("the affine line algebra is a Lie algebra")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q_int;

    #[test]
    fn builtins_validate() {
        assert_eq!(LieAlgebra::abelian(3).dim(), 3);
        assert_eq!(LieAlgebra::heisenberg().bracket(0, 1), vec![(2, q_int(1))]);
        assert_eq!(LieAlgebra::heisenberg().bracket(1, 0), vec![(2, q_int(-1))]);
        let sl2 = LieAlgebra::sl2();
        assert_eq!(sl2.bracket(0, 2), vec![(1, q_int(1))]); // [e,f] = h
        assert_eq!(sl2.bracket(1, 0), vec![(0, q_int(2))]); // [h,e] = 2e
        assert_eq!(sl2.bracket(1, 2), vec![(2, q_int(-2))]); // [h,f] = −2f
        assert_eq!(LieAlgebra::nonabelian2().bracket(0, 1), vec![(1, q_int(1))]);
    }

    #[test]
    fn rejects_antisymmetry_violation() {
        // [x,y] = x together with [y,x] = x
        let got = LieAlgebra::new(
            vec!["x".into(), "y".into()],
            vec![(0, 1, vec![(0, q_int(1))]), (1, 0, vec![(0, q_int(1))])],
        );
        assert!(matches!(got, Err(Error::Antisymmetry { i: 1, j: 0 })));
        // [x,x] ≠ 0
        let got = LieAlgebra::new(vec!["x".into()], vec![(0, 0, vec![(0, q_int(1))])]);
        assert!(matches!(got, Err(Error::Antisymmetry { i: 0, j: 0 })));
    }

    #[test]
    fn rejects_jacobi_violation() {
        // [x,y]=z, [y,z]=x, [z,x]=x fails Jacobi on (x,y,z)
        let got = LieAlgebra::new(
            vec!["x".into(), "y".into(), "z".into()],
            vec![
                (0, 1, vec![(2, q_int(1))]),
                (1, 2, vec![(0, q_int(1))]),
                (2, 0, vec![(0, q_int(1))]),
            ],
        );
        assert!(matches!(got, Err(Error::Jacobi { i: 0, j: 1, k: 2 })));
    }

    #[test]
    fn json_round_trip() {
        let text = r#"{
            "dim": 3,
            "names": ["e", "h", "f"],
            "brackets": [
                {"i": 0, "j": 1, "coeffs": {"0": "-2"}},
                {"i": 0, "j": 2, "coeffs": {"1": "1"}},
                {"i": 1, "j": 2, "coeffs": {"2": "-2"}}
            ]
        }"#;
        let lie = LieAlgebra::from_json(text).unwrap();
        assert_eq!(lie, LieAlgebra::sl2());
    }

    #[test]
    fn json_rejects_malformed() {
        assert!(LieAlgebra::from_json("{").is_err());
        let wrong_names = r#"{"dim": 2, "names": ["x"], "brackets": []}"#;
        assert!(matches!(LieAlgebra::from_json(wrong_names), Err(Error::Config(_))));
        let bad_coeff = r#"{"dim": 1, "names": ["x"], "brackets": [{"i":0,"j":0,"coeffs":{"0":"?"}}]}"#;
        assert!(LieAlgebra::from_json(bad_coeff).is_err());
    }
}
