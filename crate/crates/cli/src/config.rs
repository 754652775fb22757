//! Algebra/representation description files.
//!
//! One TOML document declares the Lie algebra (a preset name or an explicit
//! bracket list) and the representation (a preset name or explicit
//! matrices). Rationals are always strings `"p"` or `"p/q"`; indices in
//! bracket lists are 1-based. Parsed specs are fully validated: structure
//! constants must satisfy antisymmetry and Jacobi, matrices must satisfy
//! the bracket relations.

use famalg_core::lie::{abelian, affine2, heisenberg3, sl2, LieAlgebra};
use famalg_core::linalg::QMatrix;
use famalg_core::rat::parse_rat;
use famalg_core::rep::{
    abelian_standard, affine2_standard, heisenberg3_standard, sl2_standard, Representation,
};
use serde::Deserialize;

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawSpec {
    algebra: RawAlgebra,
    #[serde(default)]
    representation: Option<RawRepresentation>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawAlgebra {
    #[serde(default)]
    preset: Option<String>,
    #[serde(default)]
    dimension: Option<usize>,
    #[serde(default)]
    basis: Option<Vec<String>>,
    /// Entries `[i, j, k, "c"]`: the bracket `[X_i, X_j]` contains `c X_k`.
    #[serde(default)]
    brackets: Option<Vec<(usize, usize, usize, String)>>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawRepresentation {
    #[serde(default)]
    preset: Option<String>,
    /// One row-major matrix of rational strings per generator.
    #[serde(default)]
    matrices: Option<Vec<Vec<Vec<String>>>>,
}

/// A validated algebra/representation pair with display labels.
#[derive(Debug)]
pub struct LoadedSpec {
    pub lie: LieAlgebra,
    pub rep: Representation,
    pub algebra_label: String,
    pub rep_label: String,
}

pub fn parse_spec(text: &str) -> Result<LoadedSpec, String> {
    let raw: RawSpec = toml::from_str(text).map_err(|e| format!("spec syntax error: {e}"))?;
    let (lie, algebra_label) = build_algebra(&raw.algebra)?;

    let report = lie.validate();
    if !report.is_valid() {
        return Err(format!(
            "invalid Lie algebra `{algebra_label}`:\n  {}",
            report.violations.join("\n  ")
        ));
    }

    let raw_rep = raw.representation.unwrap_or(RawRepresentation {
        preset: Some("trivial".to_string()),
        matrices: None,
    });
    let (rep, rep_label) = build_representation(&lie, &algebra_label, &raw_rep)?;
    let report = rep.validate(&lie);
    if !report.is_valid() {
        return Err(format!(
            "invalid representation `{rep_label}` for `{algebra_label}`:\n  {}",
            report.violations.join("\n  ")
        ));
    }

    Ok(LoadedSpec {
        lie,
        rep,
        algebra_label,
        rep_label,
    })
}

/// Resolve `--preset NAME --rep NAME` without a spec file.
pub fn load_preset(algebra: &str, rep: &str) -> Result<LoadedSpec, String> {
    let text = format!(
        "[algebra]\npreset = \"{algebra}\"\n\n[representation]\npreset = \"{rep}\"\n"
    );
    parse_spec(&text)
}

fn build_algebra(raw: &RawAlgebra) -> Result<(LieAlgebra, String), String> {
    match (&raw.preset, &raw.basis, &raw.brackets) {
        (Some(name), None, None) => {
            let lie = algebra_preset(name)?;
            Ok((lie, name.clone()))
        }
        (None, Some(basis), Some(brackets)) => {
            if let Some(dim) = raw.dimension {
                if dim != basis.len() {
                    return Err(format!(
                        "dimension {dim} does not match {} basis names",
                        basis.len()
                    ));
                }
            }
            let n = basis.len();
            // Entries are assignments of c^k_ij; the mirror c^k_ji is
            // implied only when not itself listed, so an explicit
            // inconsistent pair surfaces as an antisymmetry violation.
            let mut c = vec![famalg_core::rat::rat_int(0); n * n * n];
            let mut explicit = std::collections::HashSet::new();
            for (i, j, k, text) in brackets {
                if *i == 0 || *j == 0 || *k == 0 || *i > n || *j > n || *k > n {
                    return Err(format!(
                        "bracket indices ({i}, {j}, {k}) out of range 1..={n}"
                    ));
                }
                let (i, j, k) = (i - 1, j - 1, k - 1);
                if !explicit.insert((i, j, k)) {
                    return Err(format!(
                        "duplicate bracket entry at ({}, {}, {})",
                        i + 1,
                        j + 1,
                        k + 1
                    ));
                }
                c[(i * n + j) * n + k] = parse_rat(text).map_err(|e| e.to_string())?;
            }
            for &(i, j, k) in &explicit {
                if !explicit.contains(&(j, i, k)) {
                    c[(j * n + i) * n + k] = -c[(i * n + j) * n + k].clone();
                }
            }
            let lie = LieAlgebra::from_constants(basis.clone(), c);
            Ok((lie, format!("custom(dim {n})")))
        }
        _ => Err(
            "algebra must be either `preset = \"...\"` or an explicit `basis` + `brackets` pair"
                .to_string(),
        ),
    }
}

fn algebra_preset(name: &str) -> Result<LieAlgebra, String> {
    if let Some(arg) = name
        .strip_prefix("abelian(")
        .and_then(|s| s.strip_suffix(')'))
    {
        let n: usize = arg
            .parse()
            .map_err(|_| format!("bad abelian dimension `{arg}`"))?;
        if n == 0 {
            return Err("abelian dimension must be positive".to_string());
        }
        return Ok(abelian(n));
    }
    match name {
        "sl2" => Ok(sl2()),
        "heisenberg3" => Ok(heisenberg3()),
        "affine2" => Ok(affine2()),
        other => Err(format!(
            "unknown algebra preset `{other}` (expected sl2, heisenberg3, affine2, abelian(n))"
        )),
    }
}

fn build_representation(
    lie: &LieAlgebra,
    algebra_label: &str,
    raw: &RawRepresentation,
) -> Result<(Representation, String), String> {
    match (&raw.preset, &raw.matrices) {
        (Some(name), None) => Ok((rep_preset(lie, algebra_label, name)?, name.clone())),
        (None, Some(matrices)) => {
            if matrices.len() != lie.dim() {
                return Err(format!(
                    "expected {} matrices, got {}",
                    lie.dim(),
                    matrices.len()
                ));
            }
            let mut mats = Vec::with_capacity(matrices.len());
            let d = matrices[0].len();
            for (g, rows) in matrices.iter().enumerate() {
                if rows.len() != d || rows.iter().any(|r| r.len() != d) {
                    return Err(format!(
                        "matrix for generator {} must be {d}x{d}",
                        lie.names()[g]
                    ));
                }
                let mut parsed = Vec::with_capacity(d);
                for row in rows {
                    let mut out_row = Vec::with_capacity(d);
                    for cell in row {
                        out_row.push(parse_rat(cell).map_err(|e| e.to_string())?);
                    }
                    parsed.push(out_row);
                }
                mats.push(QMatrix::from_rows(parsed));
            }
            Ok((Representation::new(mats), format!("custom(dim {d})")))
        }
        _ => Err(
            "representation must be either `preset = \"...\"` or explicit `matrices`".to_string(),
        ),
    }
}

fn rep_preset(
    lie: &LieAlgebra,
    algebra_label: &str,
    name: &str,
) -> Result<Representation, String> {
    match name {
        "trivial" => Ok(Representation::trivial(lie)),
        "adjoint" => Ok(Representation::adjoint(lie)),
        "standard" => {
            if algebra_label == "sl2" {
                Ok(sl2_standard())
            } else if algebra_label == "heisenberg3" {
                Ok(heisenberg3_standard())
            } else if algebra_label == "affine2" {
                Ok(affine2_standard())
            } else if algebra_label.starts_with("abelian(") {
                Ok(abelian_standard(lie.dim()))
            } else {
                Err(format!(
                    "no standard representation for `{algebra_label}`; give explicit matrices"
                ))
            }
        }
        other => Err(format!(
            "unknown representation preset `{other}` (expected trivial, standard, adjoint)"
        )),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn preset_specs_load() {
        for (a, r) in [
            ("sl2", "standard"),
            ("sl2", "adjoint"),
            ("heisenberg3", "standard"),
            ("affine2", "standard"),
            ("abelian(4)", "standard"),
            ("sl2", "trivial"),
        ] {
            let spec = load_preset(a, r).unwrap_or_else(|e| panic!("{a}/{r}: {e}"));
            assert_eq!(spec.algebra_label, a);
        }
    }

    #[test]
    fn explicit_heisenberg_loads() {
        let text = r#"
[algebra]
basis = ["p", "q", "z"]
brackets = [[1, 2, 3, "1"]]

[representation]
preset = "adjoint"
"#;
        let spec = parse_spec(text).unwrap();
        assert_eq!(spec.lie.dim(), 3);
        assert_eq!(spec.rep.dim(), 3);
    }

    #[test]
    fn antisymmetry_violation_is_reported_with_indices() {
        // duplicate (1,2,3) and (2,1,3) with equal signs violates antisymmetry
        let text = r#"
[algebra]
basis = ["x", "y", "z"]
brackets = [[1, 2, 3, "1"], [2, 1, 3, "1"]]
"#;
        let err = parse_spec(text).unwrap_err();
        assert!(err.contains("antisymmetry"), "got: {err}");
        assert!(err.contains("(i=1, j=2, k=3)"), "got: {err}");
    }

    #[test]
    fn jacobi_violation_is_reported() {
        // [x,y] = x, [y,z] = y, [z,x] = z has cyclic sum -(x + y + z) != 0
        let text = r#"
[algebra]
basis = ["x", "y", "z"]
brackets = [[1, 2, 1, "1"], [2, 3, 2, "1"], [3, 1, 3, "1"]]
"#;
        let err = parse_spec(text).unwrap_err();
        assert!(err.contains("Jacobi"), "got: {err}");
    }

    #[test]
    fn broken_representation_is_reported_with_pair() {
        let text = r#"
[algebra]
preset = "sl2"

[representation]
matrices = [
  [["0", "1"], ["0", "0"]],
  [["0", "0"], ["1", "0"]],
  [["1", "0"], ["0", "1"]],
]
"#;
        let err = parse_spec(text).unwrap_err();
        assert!(err.contains("bracket relation fails"), "got: {err}");
    }

    #[test]
    fn syntax_errors_surface() {
        assert!(parse_spec("not toml [").is_err());
        assert!(parse_spec("[algebra]\npreset = \"nope\"").is_err());
    }
}
