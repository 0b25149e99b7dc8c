use std::fs;
use std::io::Read as _;
use std::path::{Path, PathBuf};

use serde::Serialize;
use thiserror::Error;

use leibrack::formats::{parse_input, AugmentedJson, Input, LeibnizJson, RackJson, YdJson};
use leibrack::group_hopf::{
    function_dual_check, ker_eps_inclusion, ker_eps_yd, linearize_augmented, permutation_module, rack_q, HElem,
};
use leibrack::leibniz::{
    check_leibniz, first_order, heisenberg_voros, hv_rmatrix, lie_quotient, squares_ideal, unital_shelf,
    FIRST_ORDER_DEGREE,
};
use leibrack::lm_env::{
    build_env, check_antipode_t, check_bicomodule, check_bimodule, check_coderivation, f_tilde_checks, inv_part,
    theorem1_bracket,
};
use leibrack::rack::{
    check_augmented, check_shelf, conjugation_rack, dihedral_quandle, induced_rack, inner_augmentation,
    rack_tensor_and_braiding, set_ybe_failures,
};
use leibrack::yd::{
    braided_leibniz_unchecked, braiding, check_braided_leibniz, check_q_conditions, check_ybe, check_yd, is_involutive,
    BraidingMatrix,
};
use leibrack::{
    AugmentedRack, BraidedLeibnizData, Field, FiniteGroup, LeibnizAlgebra, LieAlgebra, LieObject, Matrix, Vector,
    YdModule,
};

use crate::report::RunReport;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] leibrack::Error),

    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },

    #[error("{command} expects {expected}, got {got}")]
    WrongInput {
        command: &'static str,
        expected: &'static str,
        got: &'static str,
    },

    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

pub type CliResult<T> = std::result::Result<T, CliError>;

pub struct Ctx {
    pub field: Field,
    pub degree: usize,
    pub paper_layout: bool,
    pub integers: bool,
}

pub fn read_input(path: &Path) -> CliResult<Input> {
    let text = if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(|source| CliError::Io {
            path: "-".into(),
            source,
        })?;
        s
    } else {
        fs::read_to_string(path).map_err(|source| CliError::Io {
            path: path.display().to_string(),
            source,
        })?
    };
    Ok(parse_input(&text)?)
}

fn wrong(command: &'static str, expected: &'static str, got: &Input) -> CliError {
    CliError::WrongInput {
        command,
        expected,
        got: got.kind(),
    }
}

fn emit(report: &mut RunReport, out: &Option<PathBuf>, artifact: &impl Serialize) -> CliResult<()> {
    if let Some(path) = out {
        let mut text = serde_json::to_string_pretty(artifact)?;
        text.push('\n');
        fs::write(path, text).map_err(|source| CliError::Io {
            path: path.display().to_string(),
            source,
        })?;
        report.artifacts.push(path.display().to_string());
    }
    Ok(())
}

fn require_integral(ctx: &Ctx, m: &Matrix) -> CliResult<()> {
    if ctx.integers && !m.is_integral() {
        return Err(leibrack::Error::Validation("--integers: matrix has non-integral entries".into()).into());
    }
    Ok(())
}

fn convert_vec(field: &Field, v: &Vector) -> CliResult<Vector> {
    Ok(v.iter()
        .map(|(k, c)| Ok((*k, field.convert(c)?)))
        .collect::<leibrack::Result<Vector>>()?)
}

fn convert_matrix(field: &Field, m: &Matrix) -> CliResult<Matrix> {
    Ok(m.try_map(|s| field.convert(s))?)
}

fn leibniz(ctx: &Ctx, command: &'static str, input: Input) -> CliResult<LeibnizAlgebra> {
    match input {
        Input::Leibniz(c) => Ok(LeibnizAlgebra::new(c.over_field(&ctx.field)?)?),
        other => Err(wrong(command, "a Leibniz algebra", &other)),
    }
}

fn augmented(command: &'static str, input: Input) -> CliResult<AugmentedRack> {
    match input {
        Input::Augmented(a) => Ok(a),
        other => Err(wrong(command, "an augmented rack", &other)),
    }
}

/// A Yetter-Drinfel'd module read from any input that determines one, with
/// its map `q` when the input carries one.
struct Source {
    module: YdModule,
    q: Option<Vec<HElem>>,
    origin: &'static str,
}

fn module_source(ctx: &Ctx, command: &'static str, input: Input) -> CliResult<Source> {
    let (module, q, origin) = match input {
        Input::Augmented(a) => (
            permutation_module(&a),
            Some(rack_q(&a)),
            "permutation module of an augmented rack",
        ),
        Input::KerEps(g) => (ker_eps_yd(&g), Some(ker_eps_inclusion(&g)), "ker ε with the inclusion"),
        Input::Leibniz(c) => {
            let l = LeibnizAlgebra::new(c.over_field(&ctx.field)?)?;
            let fo = first_order(&l)?;
            (fo.module, Some(fo.q), "first-order module of a Leibniz algebra")
        }
        Input::Yd(m) => (m, None, "Yetter-Drinfel'd module"),
        other => {
            return Err(wrong(
                command,
                "an augmented rack, ker ε, Leibniz algebra or YD module",
                &other,
            ))
        }
    };
    let module = module.over_field(&ctx.field)?;
    let q = match q {
        Some(q) => Some(
            q.iter()
                .map(|v| convert_vec(&ctx.field, v))
                .collect::<CliResult<Vec<_>>>()?,
        ),
        None => None,
    };
    Ok(Source { module, q, origin })
}

pub fn check_rack(r: &mut RunReport, input: Input) -> CliResult<()> {
    let s = match input {
        Input::Rack(s) => s,
        other => return Err(wrong("check-rack", "a rack table", &other)),
    };
    let rep = check_shelf(&s);
    r.check_with("self_distributive", rep.is_shelf, &rep.distributivity);
    r.check_with(
        "right_translations_bijective",
        rep.non_bijective.is_empty(),
        &rep.non_bijective,
    );
    r.value("size", s.len());
    r.value("is_shelf", rep.is_shelf);
    r.value("is_rack", rep.is_rack);
    r.value("is_quandle", rep.is_quandle);
    if !rep.non_idempotent.is_empty() {
        r.value("non_idempotent", &rep.non_idempotent.items);
    }
    Ok(())
}

pub fn make_dihedral(r: &mut RunReport, n: usize, out: &Option<PathBuf>) -> CliResult<()> {
    let s = dihedral_quandle(n)?;
    let rep = check_shelf(&s);
    r.check("rack", rep.is_rack);
    r.value("size", s.len());
    r.value("is_quandle", rep.is_quandle);
    emit(r, out, &RackJson::from(&s))
}

pub fn load_group(spec: &str) -> CliResult<FiniteGroup> {
    let path = Path::new(spec);
    if path.exists() {
        return match read_input(path)? {
            Input::Group(g) => Ok(g),
            other => Err(wrong("make-conjugation", "a group", &other)),
        };
    }
    Ok(FiniteGroup::named(spec)?)
}

pub fn make_conjugation(r: &mut RunReport, group: &str, augmented: bool, out: &Option<PathBuf>) -> CliResult<()> {
    let g = load_group(group)?;
    let s = conjugation_rack(&g);
    let rep = check_shelf(&s);
    r.check("rack", rep.is_rack);
    r.value("size", s.len());
    r.value("is_quandle", rep.is_quandle);
    if augmented {
        let a = AugmentedRack::conjugation(&g);
        let aug = check_augmented(&a);
        r.check_with("augmentation_identity", aug.ok, &aug.witnesses);
        emit(r, out, &AugmentedJson::from(&a))
    } else {
        emit(r, out, &RackJson::from(&s))
    }
}

pub fn inner_aug(r: &mut RunReport, input: Input, out: &Option<PathBuf>) -> CliResult<()> {
    let s = match input {
        Input::Rack(s) => s,
        other => return Err(wrong("inner-augmentation", "a rack table", &other)),
    };
    let a = inner_augmentation(&s)?;
    let aug = check_augmented(&a);
    r.check_with("augmentation_identity", aug.ok, &aug.witnesses);
    r.check("induced_rack_equals_input", induced_rack(&a)? == s);
    r.value("group_order", a.group().order());
    r.value("group_elements", a.group().elements());
    emit(r, out, &AugmentedJson::from(&a))
}

pub fn check_aug(r: &mut RunReport, input: Input) -> CliResult<()> {
    let a = augmented("check-augmented", input)?;
    let aug = check_augmented(&a);
    r.check_with("augmentation_identity", aug.ok, &aug.witnesses);
    r.value("rack_size", a.len());
    r.value("group_order", a.group().order());
    if aug.ok {
        let s = induced_rack(&a)?;
        let rep = check_shelf(&s);
        r.check_with("induced_rack", rep.is_rack, &rep.distributivity);
        r.value("induced_is_quandle", rep.is_quandle);
        r.value("induced_op", s.table());
    }
    Ok(())
}

pub fn rack_braiding(r: &mut RunReport, input: Input, out: &Option<PathBuf>) -> CliResult<()> {
    let a = augmented("rack-braiding", input)?;
    let (_, c) = rack_tensor_and_braiding(&a, &a)?;
    r.check("bijective", c.is_bijective());
    let fails = set_ybe_failures(&a);
    r.check_with("set_braid_relation", fails.is_empty(), &fails);
    r.value("pairs", c.map.len());
    emit(r, out, &c)
}

pub fn linearize(r: &mut RunReport, ctx: &Ctx, input: Input, out: &Option<PathBuf>) -> CliResult<()> {
    let a = augmented("linearize", input)?;
    let lin = linearize_augmented(&a)?;
    let module = lin.module.over_field(&ctx.field)?;
    r.check("p_is_morphism", lin.morphism_checks());
    yd_checks(r, &module)?;
    r.value("dim", module.dim());
    emit(r, out, &YdJson::from(&module))
}

fn yd_checks(r: &mut RunReport, m: &YdModule) -> CliResult<()> {
    let rep = check_yd(m)?;
    r.check_with("yd_compatibility", rep.ok_eq2, &rep.eq2_witnesses);
    r.check_with("coaction_equivariance", rep.ok_eq3, &rep.eq3_witnesses);
    Ok(())
}

pub fn check_yd_cmd(r: &mut RunReport, ctx: &Ctx, input: Input) -> CliResult<()> {
    let src = module_source(ctx, "check-yd", input)?;
    r.value("module", src.origin);
    r.value("dim", src.module.dim());
    r.value("hopf_dim", src.module.hopf().dim());
    yd_checks(r, &src.module)
}

fn paper_grid(r: &mut RunReport, ctx: &Ctx, m: &Matrix) -> CliResult<()> {
    if ctx.paper_layout {
        r.body.extend(m.to_integer_grid()?.lines().map(str::to_string));
    }
    Ok(())
}

pub fn braiding_matrix(r: &mut RunReport, ctx: &Ctx, input: Input, out: &Option<PathBuf>) -> CliResult<()> {
    let src = module_source(ctx, "braiding-matrix", input)?;
    let t = braiding(&src.module);
    require_integral(ctx, &t.matrix)?;
    r.value("module", src.origin);
    r.value("size", t.matrix.rows());
    r.value("nonzero", t.matrix.nonzero_count());
    r.value("involutive", is_involutive(&t.matrix)?);
    paper_grid(r, ctx, &t.matrix)?;
    emit(r, out, &t)
}

pub fn check_ybe_cmd(r: &mut RunReport, ctx: &Ctx, input: Input) -> CliResult<()> {
    let t = match input {
        Input::Braiding(b) => convert_matrix(&ctx.field, &b.matrix)?,
        Input::Matrix(m) => convert_matrix(&ctx.field, &m)?,
        other => braiding(&module_source(ctx, "check-ybe", other)?.module).matrix,
    };
    let rep = check_ybe(&t)?;
    r.check_with("braid_relation", rep.ok, &rep.witnesses);
    r.value("size", t.rows());
    r.value("involutive", is_involutive(&t)?);
    if let Some(d) = &rep.defect {
        r.value("defect_nonzero", d.nonzero_count());
    }
    Ok(())
}

pub fn check_leibniz_cmd(r: &mut RunReport, ctx: &Ctx, input: Input) -> CliResult<()> {
    let c = match input {
        Input::Leibniz(c) => c.over_field(&ctx.field)?,
        other => return Err(wrong("check-leibniz", "a Leibniz algebra", &other)),
    };
    let rep = check_leibniz(&c);
    r.check_with("leibniz_identity", rep.ok, &rep.witnesses);
    r.value("dim", c.dim());
    r.value("antisymmetric", c.is_antisymmetric());
    if rep.ok {
        let l = LeibnizAlgebra::new(c)?;
        r.value("squares_ideal_dim", squares_ideal(&l).dim());
    }
    Ok(())
}

pub fn lie_quotient_cmd(r: &mut RunReport, ctx: &Ctx, input: Input, out: &Option<PathBuf>) -> CliResult<()> {
    let l = leibniz(ctx, "lie-quotient", input)?;
    let q = lie_quotient(&l)?;
    require_integral(ctx, &q.projection)?;
    r.check("quotient_is_lie", LieAlgebra::new(q.quotient.clone()).is_ok());
    r.value("ideal_dim", q.ideal.dim());
    r.value("quotient_dim", q.quotient_dim());
    r.value(
        "kept",
        q.kept.iter().map(|&k| l.labels()[k].clone()).collect::<Vec<_>>(),
    );
    r.value("projection", &q.projection);
    emit(r, out, &LeibnizJson::from(&q.quotient))
}

pub fn unital_shelf_cmd(r: &mut RunReport, ctx: &Ctx, input: Option<Input>) -> CliResult<()> {
    let l = match input {
        Some(i) => leibniz(ctx, "unital-shelf", i)?,
        None => heisenberg_voros().over_field(&ctx.field)?,
    };
    let s = unital_shelf(&l);
    r.value("basis", &s.labels);
    r.body.extend(s.symbolic_display());
    Ok(())
}

pub fn first_order_cmd(r: &mut RunReport, ctx: &Ctx, input: Input, out: &Option<PathBuf>) -> CliResult<()> {
    let l = leibniz(ctx, "first-order-yd", input)?;
    let fo = first_order(&l)?;
    yd_checks(r, &fo.module)?;
    let q = check_q_conditions(&fo.module, &fo.q)?;
    r.check_with("q_equivariance", q.equivariance, &q.equivariance_witnesses);
    r.check_with("q_coderivation", q.coderivation_condition, &q.coderivation_witnesses);
    let data = braided_leibniz_unchecked(&fo.module, &fo.q);
    let bl = check_braided_leibniz(&data);
    r.check_with("braided_leibniz", bl.ok, &bl.witnesses);
    r.value("dim", fo.module.dim());
    r.value("hopf_dim", fo.module.hopf().dim());
    r.value("truncation_degree", FIRST_ORDER_DEGREE);
    emit(r, out, &YdJson::from(&fo.module))
}

pub fn hv_rmatrix_cmd(r: &mut RunReport, ctx: &Ctx, out: &Option<PathBuf>) -> CliResult<()> {
    let t = hv_rmatrix();
    let t = BraidingMatrix {
        factor_basis: t.factor_basis,
        matrix: convert_matrix(&ctx.field, &t.matrix)?,
    };
    require_integral(ctx, &t.matrix)?;
    let rep = check_ybe(&t.matrix)?;
    r.check_with("braid_relation", rep.ok, &rep.witnesses);
    r.value("size", t.matrix.rows());
    r.value("nonzero", t.matrix.nonzero_count());
    r.value("involutive", is_involutive(&t.matrix)?);
    paper_grid(r, ctx, &t.matrix)?;
    emit(r, out, &t)
}

fn lie_object(ctx: &Ctx, command: &'static str, input: Input) -> CliResult<LieObject> {
    let l = leibniz(ctx, command, input)?;
    Ok(LieObject::from_leibniz(&l)?)
}

fn bounded(k: usize) -> String {
    format!("degree <= {k}")
}

pub fn env_build(r: &mut RunReport, ctx: &Ctx, input: Input) -> CliResult<()> {
    let obj = lie_object(ctx, "env-build", input)?;
    let e = build_env(&obj, ctx.degree);
    r.check("bicomodule", check_bicomodule(&e));
    let c = check_coderivation(&e);
    r.check_scoped("coderivation", c.ok, bounded(c.checked_degree), &c.witnesses);
    let b = check_bimodule(&e);
    r.check_scoped("bimodule", b.ok, bounded(b.checked_degree), &b.witnesses);
    let t = check_antipode_t(&e);
    r.check_scoped("antipode_t", t.ok, bounded(t.checked_degree), &t.witnesses);
    let inv = inv_part(&e)?;
    r.check("inv_part_is_unit_tensor_m", inv.subspace.dim() == obj.dim());
    r.value("degree", ctx.degree);
    r.value("lie_dim", obj.lie().dim());
    r.value("pbw_dim", e.pbw().dim());
    r.value("carrier_dim", e.dim());
    r.value("inv_dim", inv.subspace.dim());
    Ok(())
}

pub fn env_checks(r: &mut RunReport, ctx: &Ctx, input: Input) -> CliResult<()> {
    let obj = lie_object(ctx, "env-checks", input)?;
    let e = build_env(&obj, ctx.degree);
    let rep = f_tilde_checks(&e)?;
    r.check_with("image_in_ker_eps", rep.im_in_ker_eps, &rep.ker_eps_witnesses);
    r.check_with("colinear", rep.colinear, &rep.colinear_witnesses);
    r.check_scoped(
        "yd_morphism",
        rep.yd_morphism,
        bounded(rep.checked_degree),
        &rep.yd_morphism_witnesses,
    );
    r.value("degree", ctx.degree);
    Ok(())
}

pub fn theorem1(r: &mut RunReport, ctx: &Ctx, input: Input, out: &Option<PathBuf>) -> CliResult<()> {
    let l = leibniz(ctx, "theorem1-bracket", input)?;
    let obj = LieObject::from_leibniz(&l)?;
    let e = build_env(&obj, ctx.degree);
    let data = theorem1_bracket(&e)?;
    require_integral(ctx, &data.bracket)?;
    let bl = check_braided_leibniz(&data);
    r.check_with("braided_leibniz", bl.ok, &bl.witnesses);
    let n = l.dim();
    let recovers = (0..n).all(|i| (0..n).all(|j| &data.bracket_basis(i, j) == l.bracket(i, j)));
    r.check("recovers_bracket", recovers);
    r.check("tau_is_flip", data.tau.matrix == BraidingMatrix::flip(n).matrix);
    r.value("degree", ctx.degree);
    r.value("dim", n);
    emit(r, out, &data)
}

pub fn q_conditions(r: &mut RunReport, ctx: &Ctx, input: Input) -> CliResult<()> {
    let src = module_source(ctx, "q-conditions", input)?;
    let Some(q) = src.q else {
        return Err(leibrack::Error::Argument("q-conditions needs an input that determines q".into()).into());
    };
    let rep = check_q_conditions(&src.module, &q)?;
    r.check_with("equivariance", rep.equivariance, &rep.equivariance_witnesses);
    r.check_with("coderivation", rep.coderivation_condition, &rep.coderivation_witnesses);
    r.value("module", src.origin);
    r.value("adjoint_linear", rep.adjoint_linear);
    r.value("colinear", rep.colinear);
    Ok(())
}

pub fn braided_leibniz_cmd(r: &mut RunReport, ctx: &Ctx, input: Input, out: &Option<PathBuf>) -> CliResult<()> {
    let data = match input {
        Input::BraidedLeibniz(d) => BraidedLeibnizData::new(
            d.labels,
            convert_matrix(&ctx.field, &d.bracket)?,
            BraidingMatrix {
                factor_basis: d.tau.factor_basis,
                matrix: convert_matrix(&ctx.field, &d.tau.matrix)?,
            },
        )?,
        other => {
            let src = module_source(ctx, "braided-leibniz", other)?;
            let Some(q) = src.q else {
                return Err(
                    leibrack::Error::Argument("braided-leibniz needs q or explicit bracket data".into()).into(),
                );
            };
            yd_checks(r, &src.module)?;
            let rep = check_q_conditions(&src.module, &q)?;
            r.check_with("q_equivariance", rep.equivariance, &rep.equivariance_witnesses);
            r.check_with(
                "q_coderivation",
                rep.coderivation_condition,
                &rep.coderivation_witnesses,
            );
            r.value("module", src.origin);
            braided_leibniz_unchecked(&src.module, &q)
        }
    };
    require_integral(ctx, &data.bracket)?;
    let bl = check_braided_leibniz(&data);
    r.check_with("braided_leibniz", bl.ok, &bl.witnesses);
    r.value("dim", data.dim());
    r.value("tau_satisfies_ybe", check_ybe(&data.tau.matrix)?.ok);
    emit(r, out, &data)
}

pub fn dual_check(r: &mut RunReport, input: Input) -> CliResult<()> {
    let a = augmented("dual-check", input)?;
    let rep = function_dual_check(&a);
    r.check_with(
        "p_star_right_colinear",
        rep.p_star_right_colinear,
        &rep.colinear_witnesses,
    );
    r.check_with("p_star_bimodule", rep.p_star_bimodule, &rep.bimodule_witnesses);
    r.value("interpretation", rep.interpretation);
    Ok(())
}
