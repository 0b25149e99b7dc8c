//! Acceptance gate. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails.

mod common;

use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use leibrack::formats::{parse_input, Input};
use leibrack::group_hopf::{function_dual_check, ker_eps_yd, permutation_module, rack_q};
use leibrack::leibniz::{
    abelian, check_leibniz, first_order_yd, heisenberg_voros, hv_rmatrix, nonabelian_2d, sl2, unital_shelf,
};
use leibrack::lm_env::{build_env, f_tilde_checks, inv_part, theorem1_bracket};
use leibrack::rack::{dihedral_quandle, inner_augmentation};
use leibrack::yd::{braided_leibniz_from_q, braiding, check_braided_leibniz, check_q_conditions, check_ybe, check_yd};
use leibrack::{AugmentedRack, BraidingMatrix, FiniteGroup, LeibnizAlgebra, LieObject, Matrix, Scalar, YdModule};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn fixtures() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../fixtures")
}

fn load(name: &str) -> Input {
    let text = std::fs::read_to_string(fixtures().join(name)).unwrap_or_else(|e| panic!("{name}: {e}"));
    parse_input(&text).unwrap_or_else(|e| panic!("{name}: {e}"))
}

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn within(start: Instant, limit: Duration) -> Result<(), String> {
    let t = start.elapsed();
    ensure(
        t < limit,
        format!("took {:.3} s, limit {} s", t.as_secs_f64(), limit.as_secs_f64()),
    )
}

fn reference() -> Matrix {
    let rows: Vec<&[i64]> = common::HV_RMATRIX.iter().map(|r| r.as_slice()).collect();
    Matrix::from_i64_rows(&rows).unwrap()
}

fn rmatrix_reproduction() -> Outcome {
    let start = Instant::now();
    let t = hv_rmatrix();
    let emitted: BraidingMatrix = serde_json::from_str(&serde_json::to_string(&t).unwrap()).unwrap();
    ensure(
        emitted.matrix.rows() == 16 && emitted.matrix.is_integral(),
        "not a 16x16 integer matrix",
    )?;
    let expected = reference();
    let diffs: Vec<(usize, usize)> = (0..16)
        .flat_map(|i| (0..16).map(move |j| (i, j)))
        .filter(|&(i, j)| emitted.matrix[(i, j)] != expected[(i, j)])
        .collect();
    ensure(diffs.is_empty(), format!("entries differ at {diffs:?}"))?;
    let row13: Vec<(usize, i64)> = (0..16)
        .filter(|&j| !emitted.matrix[(12, j)].is_zero())
        .map(|j| (j + 1, emitted.matrix[(12, j)].to_i64().unwrap()))
        .collect();
    ensure(
        row13 == [(4, 1), (6, 1), (7, -1), (10, 1), (11, 1)],
        format!("row 13 is {row13:?}"),
    )?;
    within(start, Duration::from_secs(1))?;
    Ok("256 entries equal; row 13 = 1,1,-1,1,1 at columns 4,6,7,10,11".into())
}

fn non_involutive() -> Outcome {
    let start = Instant::now();
    let t = hv_rmatrix().matrix;
    let sq = t.mul(&t).unwrap();
    ensure(!sq.is_identity(), "T·T = I")?;
    within(start, Duration::from_secs(1))?;
    let off = (0..16)
        .flat_map(|i| (0..16).map(move |j| (i, j)))
        .filter(|&(i, j)| sq[(i, j)] != if i == j { Scalar::one() } else { Scalar::zero() });
    Ok(format!("T·T differs from I in {} entries", off.count()))
}

fn ybe_reproduced() -> Outcome {
    let start = Instant::now();
    let rep = check_ybe(&reference()).map_err(|e| e.to_string())?;
    ensure(rep.ok, format!("braid relation fails at {:?}", rep.witnesses.items))?;
    ensure(rep.defect.is_none(), "nonzero defect reported")?;
    within(start, Duration::from_secs(5))?;
    Ok("64x64 products agree".into())
}

fn shelf_formula() -> Outcome {
    let s = unital_shelf(&heisenberg_voros());
    ensure(s.labels == ["1", "x", "y", "z"], format!("basis {:?}", s.labels))?;
    // Variables a, b, c, d are indices 0..3; key (i, j) is the monomial v_i v_j'.
    let expected: [&[((usize, usize), i64)]; 4] = [
        &[((0, 0), 1)],
        &[((1, 0), 1)],
        &[((2, 0), 1)],
        &[((1, 1), 1), ((1, 2), 1), ((2, 1), -1), ((2, 2), 1), ((3, 0), 1)],
    ];
    for (k, (poly, want)) in s.symbolic().iter().zip(expected).enumerate() {
        let got: Vec<((usize, usize), i64)> = poly.iter().map(|(m, c)| (*m, c.to_i64().unwrap())).collect();
        ensure(got == want, format!("component {} is {got:?}", s.labels[k]))?;
    }
    Ok(s.symbolic_display().join("; "))
}

fn classical_recovery() -> Outcome {
    let cases = [
        ("heisenberg-voros", heisenberg_voros()),
        ("abelian 2", abelian(2)),
        ("nonabelian 2", nonabelian_2d()),
        ("sl2", sl2()),
    ];
    for (name, l) in &cases {
        let e = build_env(&LieObject::from_leibniz(l).map_err(|e| e.to_string())?, 2);
        let b = theorem1_bracket(&e).map_err(|e| format!("{name}: {e}"))?;
        let n = l.dim();
        for i in 0..n {
            for j in 0..n {
                ensure(
                    &b.bracket_basis(i, j) == l.bracket(i, j),
                    format!("{name}: bracket ({i},{j}) differs"),
                )?;
            }
        }
        ensure(
            b.tau.matrix == BraidingMatrix::flip(n).matrix,
            format!("{name}: τ is not the flip"),
        )?;
    }
    Ok(format!("{} algebras recovered at degree 2 with τ = flip", cases.len()))
}

fn augmented_rack_bracket() -> Outcome {
    let start = Instant::now();
    let mut racks = vec![(
        "S3 conjugation".to_string(),
        AugmentedRack::conjugation(&FiniteGroup::symmetric(3).unwrap()),
    )];
    for n in 3..=7 {
        racks.push((
            format!("R{n}"),
            inner_augmentation(&dihedral_quandle(n).unwrap()).unwrap(),
        ));
    }
    let mut triples = 0;
    for (name, a) in &racks {
        let m = permutation_module(a);
        let q = rack_q(a);
        let yd = check_yd(&m).map_err(|e| e.to_string())?;
        ensure(yd.ok(), format!("{name}: YD fails"))?;
        ensure(
            check_q_conditions(&m, &q).map_err(|e| e.to_string())?.ok(),
            format!("{name}: q conditions fail"),
        )?;
        let d = braided_leibniz_from_q(&m, &q).map_err(|e| e.to_string())?;
        let bl = check_braided_leibniz(&d);
        ensure(
            bl.ok,
            format!("{name}: braided Leibniz fails at {:?}", bl.witnesses.items),
        )?;
        triples += m.dim().pow(3);
    }
    within(start, Duration::from_secs(5))?;
    Ok(format!("{} racks, {triples} basis triples", racks.len()))
}

fn module_of(input: Input) -> YdModule {
    match input {
        Input::Augmented(a) => permutation_module(&a),
        Input::KerEps(g) => ker_eps_yd(&g),
        Input::Leibniz(c) => first_order_yd(&LeibnizAlgebra::new(c).unwrap()).unwrap(),
        Input::Yd(m) => m,
        other => panic!("no module in {}", other.kind()),
    }
}

fn biconditional() -> Outcome {
    let corpus = [
        "s3_augmented.json",
        "z2_augmented.json",
        "dihedral3_augmented.json",
        "s3_linearized.json",
        "ker_eps_z2.json",
        "ker_eps_z3.json",
        "ker_eps_s3.json",
        "ker_eps_s4.json",
        "heisenberg_voros.json",
        "hv_first_order_yd.json",
        "sl2.json",
        "nonabelian2d.json",
        "square_extension.json",
        "abelian2.json",
        "broken.json",
        "broken_left.json",
    ];
    let mut broken = 0;
    for name in corpus {
        let m = module_of(load(name));
        let yd = check_yd(&m).map_err(|e| e.to_string())?.ok();
        let ybe = check_ybe(&braiding(&m).matrix).map_err(|e| e.to_string())?.ok;
        ensure(yd == ybe, format!("{name}: YD {yd} but YBE {ybe}"))?;
        broken += usize::from(!yd);
    }
    ensure(broken >= 2, format!("only {broken} broken instances"))?;
    // A trivial action makes τ the flip, which braids whatever the grading;
    // such modules are outside the corpus and pinned in the construction tests.
    let trivial = module_of(load("s3_trivial_action.json"));
    let yd = check_yd(&trivial).map_err(|e| e.to_string())?.ok();
    let ybe = check_ybe(&braiding(&trivial).matrix).map_err(|e| e.to_string())?.ok;
    Ok(format!(
        "{} instances agree, {broken} broken; excluded s3_trivial_action.json (YD {yd}, braid relation {ybe})",
        corpus.len()
    ))
}

fn lemma_suite() -> Outcome {
    let mut names = Vec::new();
    let mut dir: Vec<_> = std::fs::read_dir(fixtures())
        .unwrap()
        .map(|e| e.unwrap().path())
        .collect();
    dir.sort();
    for path in dir {
        let Ok(Input::Leibniz(c)) = parse_input(&std::fs::read_to_string(&path).unwrap()) else {
            continue;
        };
        if !check_leibniz(&c).ok {
            continue;
        }
        let name = path.file_name().unwrap().to_string_lossy().to_string();
        let l = LeibnizAlgebra::new(c).unwrap();
        let e = build_env(&LieObject::from_leibniz(&l).map_err(|e| e.to_string())?, 2);
        let rep = f_tilde_checks(&e).map_err(|e| format!("{name}: {e}"))?;
        ensure(rep.im_in_ker_eps, format!("{name}: part (1) fails"))?;
        ensure(rep.colinear, format!("{name}: part (2) fails"))?;
        ensure(rep.yd_morphism, format!("{name}: part (3) fails"))?;
        let inv = inv_part(&e).map_err(|e| e.to_string())?;
        for r in 0..inv.subspace.dim() {
            ensure(
                e.pbw().counit(&e.phi(&inv.vector(r))).is_zero(),
                format!("{name}: ε∘φ ≠ 0"),
            )?;
        }
        names.push(name);
    }
    ensure(names.len() >= 5, format!("only {} fixture algebras", names.len()))?;
    Ok(names.join(", "))
}

fn ker_eps() -> Outcome {
    let start = Instant::now();
    for name in ["Z2", "Z3", "S3", "S4"] {
        let rep = check_yd(&ker_eps_yd(&FiniteGroup::named(name).unwrap())).map_err(|e| e.to_string())?;
        ensure(rep.ok(), format!("{name}: YD fails"))?;
    }
    within(start, Duration::from_secs(5))?;
    Ok("Z/2, Z/3, S3, S4".into())
}

fn dual() -> Outcome {
    for name in ["z2_augmented.json", "s3_augmented.json"] {
        let Input::Augmented(a) = load(name) else {
            return Err(format!("{name} is not augmented"));
        };
        let rep = function_dual_check(&a);
        ensure(
            rep.p_star_right_colinear && rep.p_star_bimodule,
            format!("{name}: dual check fails"),
        )?;
    }
    Ok("Z/2 and S3".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("R-matrix reproduction", rmatrix_reproduction),
        ("non-involutivity", non_involutive),
        ("braid relation for the R-matrix", ybe_reproduced),
        ("unital shelf formula", shelf_formula),
        ("classical recovery", classical_recovery),
        ("augmented-rack bracket", augmented_rack_bracket),
        ("YD iff YBE corpus", biconditional),
        ("enveloping lemma suite", lemma_suite),
        ("ker ε YD module", ker_eps),
        ("function dual", dual),
    ];
    let mut failed = 0;
    for (k, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(f).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {:>2} PASS  {name} ({secs:.3} s): {detail}", k + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name} ({secs:.3} s): {why}", k + 1);
            }
        }
    }
    println!(
        "acceptance: {} of {} criteria pass",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
