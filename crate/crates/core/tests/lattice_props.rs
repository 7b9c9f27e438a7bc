mod common;

use common::canonical;
use hc_core::arith::ratio;
use hc_core::lattice::{
    for_each_configuration, r_matrix, yang_baxter_check, yang_baxter_check_with, z_lattice_enum, z_lattice_transfer,
    z_lattice_transfer_with_stats, LatticeSpec, VertexKind, DEFAULT_ENUM_BUDGET,
};
use hc_core::sampler::Sampler;
use hc_core::zhc::z_sum;
use hc_core::SumFormulaId;

#[test]
fn every_line_with_different_ends_has_a_c_vertex() {
    let mut sampler = Sampler::new(31);
    for (a, b) in [(1, 1), (2, 1), (1, 2), (3, 0), (0, 3)] {
        let c = sampler.coupling();
        let pt = sampler.point(a, b, &c).unwrap();
        let spec = LatticeSpec::canonical(&pt);
        let (nr, nc) = (spec.rows.len(), spec.columns.len());
        let bd = spec.boundary.clone();
        let count = for_each_configuration(&spec, DEFAULT_ENUM_BUDGET, |kinds, _| {
            for r in 0..nr {
                if bd.left[r] != bd.right[r] {
                    assert!((0..nc).any(|col| kinds[r * nc + col] == VertexKind::C), "row {r}");
                }
            }
            for col in 0..nc {
                if bd.bottom[col] != bd.top[col] {
                    assert!((0..nr).any(|r| kinds[r * nc + col] == VertexKind::C), "column {col}");
                }
            }
        })
        .unwrap();
        assert!(count >= 1);
    }
}

#[test]
fn oracles_agree_with_formulas() {
    let mut sampler = Sampler::new(32);
    for (a, b) in [(1, 1), (2, 1), (1, 2), (2, 2), (3, 1), (1, 3), (4, 0), (0, 4)] {
        let c = sampler.coupling();
        let pt = sampler.point(a, b, &c).unwrap();
        let spec = LatticeSpec::canonical(&pt);
        let transfer = z_lattice_transfer(&spec).unwrap();
        assert_eq!(z_lattice_enum(&spec).unwrap(), transfer);
        assert_eq!(z_sum(SumFormulaId::AlRhcIhc, &pt).unwrap(), transfer);
    }
}

#[test]
fn canonical_spec_from_json() {
    let text = r#"{"c": "1", "columns": [{"param": "7", "dotted": true}, {"param": "0", "dotted": false}],
        "rows": ["5", "3"], "boundary": {"left": [2,2], "right": [3,1], "bottom": [3,2], "top": [2,1]}}"#;
    let spec: LatticeSpec = serde_json::from_str(text).unwrap();
    assert_eq!(spec, LatticeSpec::canonical(&canonical()));
    assert_eq!(z_lattice_enum(&spec).unwrap(), ratio(9, 40));
    let (value, peak) = z_lattice_transfer_with_stats(&spec).unwrap();
    assert_eq!(value, ratio(9, 40));
    assert!(peak <= 9);
    assert!(serde_json::from_str::<LatticeSpec>(&text.replace("[3,2]", "[4,2]")).is_err());
}

#[test]
fn yang_baxter_and_its_mutation() {
    let mut sampler = Sampler::new(33);
    for _ in 0..5 {
        let c = sampler.coupling();
        let xyz = sampler.fresh(&[], &c, 3).unwrap();
        assert!(yang_baxter_check(&xyz[0], &xyz[1], &xyz[2], &c).unwrap());
        let mutated = |x: &_, y: &_, c: &_| {
            let mut m = r_matrix(x, y, c)?;
            m[1][3] = &m[1][3] * ratio(2, 1);
            Ok(m)
        };
        assert!(!yang_baxter_check_with(mutated, &xyz[0], &xyz[1], &xyz[2], &c).unwrap());
    }
}
