use std::collections::BTreeSet;
use std::fs::File;
use std::io::{self, BufWriter, Read, Write};
use std::path::Path;

use anyhow::{bail, Context as _};
use gaussoids::algebra::{check_all_compatibility, dim_formula, nonvanishing, quadric_space};
use gaussoids::cube::{all_trinomials, edge_trinomials, square_trinomials, trinomial_count_formula};
use gaussoids::enumerate::cnf::{build_gaussoid_cnf, build_orientation_cnf, build_oriented_cnf};
use gaussoids::enumerate::{
    count_gaussoids, count_oriented, count_orientations_cnf, enumerate_oriented, enumerate_orientations, for_each_gaussoid,
    gaussoid_models, oriented_keys, OrientedMode,
};
use gaussoids::gaussoid::{gaussoid_of_matrix, parse_gaussoid_file, Checker};
use gaussoids::linalg::{format_rational, int, MatrixJson, SymmetricMatrix};
use gaussoids::oriented::positive_census;
use gaussoids::realize::{
    bfp_certificate, mmatrix_realization, search_realization, sign_vector, uniform_class_rows, verify_class_rows, BfpOutcome,
    RowStatus,
};
use gaussoids::valuated::eps::EpsMatrix;
use gaussoids::valuated::{
    minor_valuations, n3_eps_concentration, n3_lineality_vector, n3_ray_terms, n3_ray_valuations, n4_nonrealizable_valuation,
    ten_face_valuation, Valuation, ValuationJson, N3_TROPICAL_ORDER,
};
use gaussoids::{Gaussoid, GroundSet, Group, GroupAction, OrientedGaussoid, Strategy};
use serde_json::{json, Value};

use crate::report::{line, Format, Report};
use crate::*;

pub struct Context {
    pub format: Format,
    pub strategy: Strategy,
    pub seed: u64,
}

fn read_input(path: &Path) -> anyhow::Result<String> {
    let mut text = String::new();
    if path.as_os_str() == "-" {
        io::stdin().read_to_string(&mut text)?;
    } else {
        text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    }
    Ok(text)
}

fn read_gaussoids(gs: &GroundSet, path: &Path) -> anyhow::Result<Vec<Gaussoid>> {
    let text = read_input(path)?;
    parse_gaussoid_file(gs, &text).with_context(|| format!("in {}", path.display()))
}

fn sink(path: Option<&Path>) -> anyhow::Result<Box<dyn Write>> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(File::create(p).with_context(|| format!("creating {}", p.display()))?)),
        None => Box::new(BufWriter::new(io::stdout())),
    })
}

fn require_extended(n: usize, extended: bool, what: &str) -> anyhow::Result<()> {
    if n >= 5 && !extended {
        bail!("the {what} census for n = {n} is a long run; pass --extended");
    }
    Ok(())
}

fn mode(what: What) -> Option<OrientedMode> {
    match what {
        What::Gaussoids => None,
        What::Oriented => Some(OrientedMode::All),
        What::Uniform => Some(OrientedMode::Uniform),
        What::Positive => Some(OrientedMode::Positive),
    }
}

fn what_name(what: What) -> &'static str {
    match mode(what) {
        None => "gaussoids",
        Some(m) => m.name(),
    }
}

pub fn trinomials(_ctx: &Context, a: &TrinomialsArgs) -> anyhow::Result<Report> {
    let gs = GroundSet::new(a.n)?;
    let list = match a.kind {
        TrinomialSet::All => all_trinomials(&gs),
        TrinomialSet::Square => square_trinomials(&gs),
        TrinomialSet::Edge => edge_trinomials(&gs),
    };
    let mut text = String::new();
    let ok = a.kind != TrinomialSet::All || list.len() as u64 == trinomial_count_formula(a.n);
    if a.count_only {
        line(&mut text, list.len().to_string());
        return Ok(Report::new(ok, text, json!({ "n": a.n, "count": list.len().to_string() })));
    }
    for t in &list {
        line(&mut text, t.to_string());
    }
    let items: Vec<Value> = list
        .iter()
        .map(|t| {
            Value::Array(
                t.terms
                    .iter()
                    .map(|term| {
                        json!({ "coeff": term.coeff.to_string(), "factors": [term.factors[0].to_string(), term.factors[1].to_string()] })
                    })
                    .collect(),
            )
        })
        .collect();
    Ok(Report::new(ok, text, json!({ "n": a.n, "count": list.len().to_string(), "trinomials": items })))
}

pub fn check(_ctx: &Context, a: &CheckArgs) -> anyhow::Result<Report> {
    let gs = GroundSet::new(a.n)?;
    let gaussoids = read_gaussoids(&gs, &a.file)?;
    let checker = Checker::new(&gs);
    let mut text = String::new();
    let mut results = Vec::new();
    let mut ok = true;
    for (index, g) in gaussoids.iter().enumerate() {
        let violation = checker.first_axiom_violation(g).map(|ax| {
            let names = |idx: [usize; 2]| idx.map(|i| gs.a_symbol(i).to_string());
            let [p1, p2] = names(ax.premises);
            let [c1, c2] = names(ax.conclusions);
            let joiner = if ax.axiom == 4 { "or" } else { "and" };
            (ax.axiom, format!("G{}: {p1}, {p2} imply {c1} {joiner} {c2}", ax.axiom))
        });
        match &violation {
            None => line(&mut text, "gaussoid: true"),
            Some((_, why)) => {
                ok = false;
                line(&mut text, format!("gaussoid: false ({why})"));
            }
        }
        results.push(json!({
            "index": index,
            "gaussoid": violation.is_none(),
            "violation": violation.map(|(_, why)| why),
        }));
    }
    Ok(Report::new(ok, text, json!({ "n": a.n, "all_gaussoids": ok, "results": results })))
}

/// Streams the gaussoid census to `out` (stdout if none) when text lines are wanted.
fn stream_gaussoids(ctx: &Context, gs: &GroundSet, out: Option<&Path>, bits: bool) -> anyhow::Result<String> {
    let write_lines = out.is_some() || ctx.format == Format::Text;
    if !write_lines {
        return Ok(count_gaussoids(gs, ctx.strategy).to_string());
    }
    let mut w = sink(out)?;
    let mut err = None;
    let count = for_each_gaussoid(gs, |g| {
        if err.is_none() {
            let s = if bits { g.to_bitstring() } else { g.to_text() };
            if let Err(e) = writeln!(w, "{s}") {
                err = Some(e);
            }
        }
    });
    if let Some(e) = err {
        return Err(e.into());
    }
    w.flush()?;
    Ok(count.to_string())
}

pub fn enumerate(ctx: &Context, a: &EnumerateArgs) -> anyhow::Result<Report> {
    let gs = GroundSet::new(a.n)?;
    require_extended(a.n, a.extended, "gaussoid")?;
    let count = stream_gaussoids(ctx, &gs, a.out.as_deref(), a.bits)?;
    let text = if a.out.is_some() { format!("gaussoids: {count}\n") } else { String::new() };
    Ok(Report::new(true, text, json!({ "n": a.n, "what": "gaussoids", "count": count })))
}

pub fn dimacs(_ctx: &Context, a: &DimacsArgs) -> anyhow::Result<Report> {
    let gs = GroundSet::new(a.n)?;
    let formula = if let Some(path) = &a.orientations_of {
        let gaussoids = read_gaussoids(&gs, path)?;
        let Some(g) = gaussoids.first() else { bail!("{} holds no gaussoid", path.display()) };
        build_orientation_cnf(g)?.0
    } else if a.oriented {
        build_oriented_cnf(&gs)
    } else {
        build_gaussoid_cnf(&gs)
    };
    let cnf = formula.to_dimacs();
    let header = format!("p cnf {} {}", formula.variable_count, formula.clause_count());
    let mut summary = json!({ "n": a.n, "variables": formula.variable_count, "clauses": formula.clause_count() });
    let text = match &a.out {
        Some(path) => {
            std::fs::write(path, &cnf).with_context(|| format!("writing {}", path.display()))?;
            format!("{header}\n")
        }
        None => {
            summary["cnf"] = Value::String(cnf.clone());
            cnf
        }
    };
    Ok(Report::new(true, text, summary))
}

pub fn orbits(ctx: &Context, a: &OrbitsArgs) -> anyhow::Result<Report> {
    let gs = GroundSet::new(a.n)?;
    let group: Group = a.group.parse()?;
    let action = GroupAction::new(&gs, group)?;
    let (count, rows): (usize, Vec<(usize, String)>) = match mode(a.what) {
        None => {
            if group == Group::ReorientSn {
                bail!("reorient-sn acts on oriented gaussoids; pick --what oriented, uniform or positive");
            }
            require_extended(a.n, a.extended, "gaussoid")?;
            let models = gaussoid_models(&gs, ctx.strategy)?;
            let orbits = action.partition(&models, ctx.strategy)?;
            let rows = orbits.iter().map(|o| (o.size, Gaussoid::from_u128(&gs, o.representative).to_text())).collect();
            (orbits.len(), rows)
        }
        Some(m) => {
            if !matches!(group, Group::Sn | Group::ReorientSn) {
                bail!("oriented censuses support the groups sn and reorient-sn");
            }
            if m != OrientedMode::Positive {
                require_extended(a.n, a.extended, m.name())?;
            }
            let keys = oriented_keys(&gs, m, ctx.strategy)?;
            let orbits = action.partition_oriented(&keys, ctx.strategy)?;
            let rows =
                orbits.iter().map(|o| (o.size, OrientedGaussoid::from_key(&gs, o.representative).sign_string())).collect();
            (orbits.len(), rows)
        }
    };
    let mut text = String::new();
    line(&mut text, format!("orbits: {count}"));
    let mut summary =
        json!({ "n": a.n, "what": what_name(a.what), "group": group.name(), "orbit_count": count.to_string() });
    if !a.count_only {
        for (size, rep) in &rows {
            line(&mut text, format!("{size} {rep}"));
        }
        summary["orbits"] =
            rows.iter().map(|(size, rep)| json!({ "size": size.to_string(), "representative": rep })).collect();
    }
    if a.count_only {
        text = format!("{count}\n");
    }
    Ok(Report::new(true, text, summary))
}

pub fn orient(_ctx: &Context, a: &OrientArgs) -> anyhow::Result<Report> {
    let gs = GroundSet::new(a.n)?;
    let gaussoids = read_gaussoids(&gs, &a.file)?;
    let mut text = String::new();
    let mut results = Vec::new();
    for g in &gaussoids {
        let mut entry = json!({ "gaussoid": g.to_text() });
        if a.cnf && !a.list {
            let count = count_orientations_cnf(g)?;
            line(&mut text, format!("orientations: {count}"));
            entry["count"] = Value::String(count.to_string());
        } else {
            let all = enumerate_orientations(g);
            line(&mut text, format!("orientations: {}", all.len()));
            entry["count"] = Value::String(all.len().to_string());
            if a.list {
                let signs: Vec<String> = all.iter().map(|phi| phi.sign_string()).collect();
                for s in &signs {
                    line(&mut text, s);
                }
                entry["orientations"] = json!(signs);
            }
        }
        results.push(entry);
    }
    Ok(Report::new(true, text, json!({ "n": a.n, "results": results })))
}

pub fn census(ctx: &Context, a: &CensusArgs) -> anyhow::Result<Report> {
    let gs = GroundSet::new(a.n)?;
    let name = what_name(a.what);
    let count = match mode(a.what) {
        None => {
            require_extended(a.n, a.extended, name)?;
            if a.count_only {
                count_gaussoids(&gs, ctx.strategy).to_string()
            } else {
                stream_gaussoids(ctx, &gs, a.out.as_deref(), a.bits)?
            }
        }
        Some(m) => {
            if m != OrientedMode::Positive {
                require_extended(a.n, a.extended, name)?;
            }
            if a.count_only {
                count_oriented(&gs, m, ctx.strategy)?.to_string()
            } else {
                let all = enumerate_oriented(&gs, m, ctx.strategy)?;
                if a.out.is_some() || ctx.format == Format::Text {
                    let mut w = sink(a.out.as_deref())?;
                    for phi in &all {
                        writeln!(w, "{}", phi.sign_string())?;
                    }
                    w.flush()?;
                }
                all.len().to_string()
            }
        }
    };
    let summary = json!({ "n": a.n, "what": name, "count": count });
    if a.count_only {
        return Ok(Report::new(true, format!("{count}\n"), summary));
    }
    let text = if a.out.is_some() { format!("{name}: {count}\n") } else { String::new() };
    Ok(Report::new(true, text, summary))
}

pub fn positive(ctx: &Context, a: &PositiveArgs) -> anyhow::Result<Report> {
    let gs = GroundSet::new(a.n)?;
    let keys = oriented_keys(&gs, OrientedMode::Positive, ctx.strategy)?;
    let supports: BTreeSet<u128> = keys.iter().map(|&(zero, _)| zero).collect();
    let graphs = positive_census(&gs)?;
    let graphical: BTreeSet<u128> =
        graphs.iter().map(|(_, phi)| phi.key().expect("n ≤ 5").0).collect();
    let mut faithful = 0usize;
    let mut nonnegative = 0usize;
    for (g, _) in &graphs {
        let r = mmatrix_realization(g, &int(1))?;
        faithful += usize::from(r.faithful);
        nonnegative += usize::from(r.nonnegative);
    }
    let equal = supports == graphical && keys.len() == graphs.len();
    let total = graphs.len();
    let ok = equal && faithful == total && nonnegative == total;
    let mut text = String::new();
    line(&mut text, format!("positive: {}", keys.len()));
    line(&mut text, format!("graphs: {total}"));
    line(&mut text, format!("positive = graphical: {equal}"));
    line(&mut text, format!("m-matrix faithful: {faithful}/{total}"));
    line(&mut text, format!("nonnegative a-minors: {nonnegative}/{total}"));
    let summary = json!({
        "n": a.n,
        "positive": keys.len().to_string(),
        "graphs": total.to_string(),
        "graphical": equal,
        "faithful": faithful.to_string(),
        "nonnegative": nonnegative.to_string(),
    });
    Ok(Report::new(ok, text, summary))
}

pub fn quadrics(ctx: &Context, a: &QuadricsArgs) -> anyhow::Result<Report> {
    let gs = GroundSet::new(a.n)?;
    let space = quadric_space(&gs, ctx.strategy);
    let formula = dim_formula(a.n);
    let dim_ok = formula == space.dimension().into();
    let mut text = String::new();
    line(&mut text, format!("generators: {}", space.generators.len()));
    line(&mut text, format!("dimension: {}", space.dimension()));
    line(&mut text, format!("formula: {formula}"));
    let mut summary = json!({
        "n": a.n,
        "generators": space.generators.len().to_string(),
        "dimension": space.dimension().to_string(),
        "formula": formula.to_string(),
    });
    let mut ok = dim_ok;
    if let Some(trials) = a.verify {
        let bad = nonvanishing(&gs, &space.generators, trials, ctx.seed, ctx.strategy)?;
        line(&mut text, format!("nonvanishing: {} of {} ({trials} trials each)", bad.len(), space.generators.len()));
        summary["nonvanishing"] = json!(bad.iter().map(|&i| space.generators[i].to_string()).collect::<Vec<_>>());
        ok &= bad.is_empty();
    }
    if a.compat {
        require_extended(a.n, a.extended, "compatibility")?;
        let report = check_all_compatibility(&gs, ctx.strategy)?;
        line(&mut text, format!("compatibility: {} gaussoids, {} violations", report.gaussoids, report.violations.len()));
        summary["compatibility"] =
            json!({ "gaussoids": report.gaussoids.to_string(), "violations": report.violations.len().to_string() });
        ok &= report.violations.is_empty();
    }
    if a.list {
        for q in &space.generators {
            line(&mut text, q.to_string());
        }
        summary["quadrics"] = space.generators.iter().map(|q| serde_json::to_value(q.to_json())).collect::<Result<_, _>>()?;
    }
    Ok(Report::new(ok, text, summary))
}

pub fn tropical(_ctx: &Context, a: &TropicalArgs) -> anyhow::Result<Report> {
    let rays = n3_ray_valuations();
    let mut text = String::new();
    let mut summary = json!({});
    let mut ok = true;
    let want = |c: TropicalCheck| a.what == TropicalCheck::All || a.what == c;
    if want(TropicalCheck::Rays) {
        let valid = rays.iter().filter(|v| v.is_valuated_gaussoid()).count();
        let mut types: Vec<(&str, usize)> = Vec::new();
        for (ty, _) in n3_ray_terms() {
            match types.iter_mut().find(|(t, _)| *t == ty) {
                Some((_, c)) => *c += 1,
                None => types.push((ty, 1)),
            }
        }
        let by_type: Vec<String> = types.iter().map(|(t, c)| format!("{t} {c}")).collect();
        line(&mut text, format!("rays: {valid}/{} valuated ({})", rays.len(), by_type.join(", ")));
        summary["rays"] = json!({ "valid": valid.to_string(), "total": rays.len().to_string() });
        ok &= valid == rays.len();
    }
    if want(TropicalCheck::Lineality) {
        let mut valid = 0usize;
        let mut total = 0usize;
        for ray in &rays {
            for signs in 0..16u32 {
                let coeffs = [0, 1, 2, 3].map(|b| if signs >> b & 1 == 1 { -1 } else { 1 });
                total += 1;
                valid += usize::from(ray.shifted(&n3_lineality_vector(coeffs)).is_valuated_gaussoid());
            }
        }
        line(&mut text, format!("lineality shifts: {valid}/{total} valuated"));
        summary["lineality"] = json!({ "valid": valid.to_string(), "total": total.to_string() });
        ok &= valid == total;
    }
    if want(TropicalCheck::Fixtures) {
        let n4 = n4_nonrealizable_valuation().is_valuated_gaussoid();
        let ten = ten_face_valuation().is_valuated_gaussoid();
        let gs3 = GroundSet::new(3)?;
        let eps = minor_valuations(&gs3, &n3_eps_concentration(), true)?;
        let order: Vec<_> = N3_TROPICAL_ORDER.iter().map(|s| gs3.parse_symbol(s)).collect::<Result<_, _>>()?;
        let realized: Vec<String> = eps.in_order(&order).iter().map(|v| v.to_string()).collect();
        let eps_ok = eps.is_valuated_gaussoid();
        line(&mut text, format!("n=4 fixture valuated: {n4}"));
        line(&mut text, format!("ten-face indicator valuated: {ten}"));
        line(&mut text, format!("epsilon realization: ({}) valuated: {eps_ok}", realized.join(" ")));
        summary["fixtures"] = json!({ "n4": n4, "ten_face": ten, "epsilon": realized, "epsilon_valuated": eps_ok });
        ok &= n4 && ten && eps_ok;
    }
    Ok(Report::new(ok, text, summary))
}

fn parse_eps_rows(text: &str) -> anyhow::Result<EpsMatrix> {
    let rows: Vec<Vec<&str>> = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|l| l.split(',').map(str::trim).collect())
        .collect();
    Ok(EpsMatrix::parse_rows(&rows)?)
}

pub fn valuation(_ctx: &Context, a: &ValuationArgs) -> anyhow::Result<Report> {
    let input = read_input(&a.file)?;
    let nu = if a.eps {
        let m = parse_eps_rows(&input).with_context(|| format!("in {}", a.file.display()))?;
        let gs = GroundSet::new(m.n())?;
        minor_valuations(&gs, &m, a.inverse)?
    } else {
        let json: ValuationJson = serde_json::from_str(&input).with_context(|| format!("in {}", a.file.display()))?;
        Valuation::from_json(&json)?
    };
    let violation = nu.first_violation();
    let mut text = String::new();
    if a.eps {
        for (s, v) in nu.ground_set().symbols().iter().zip(nu.values()) {
            line(&mut text, format!("{s} {v}"));
        }
    }
    match &violation {
        None => line(&mut text, "valuated gaussoid: true"),
        Some(t) => line(&mut text, format!("valuated gaussoid: false ({t})")),
    }
    let mut summary = json!({ "valuated_gaussoid": violation.is_none(), "violation": violation.map(|t| t.to_string()) });
    if a.eps {
        summary["valuation"] = serde_json::to_value(nu.to_json())?;
    }
    Ok(Report::new(violation.is_none(), text, summary))
}

fn matrix_rows(m: &SymmetricMatrix) -> Value {
    serde_json::to_value(m.to_json()).expect("serializable")
}

pub fn realize(ctx: &Context, a: &RealizeArgs) -> anyhow::Result<Report> {
    if let Some(path) = &a.matrix {
        return realize_matrix(path);
    }
    if let Some(signs) = &a.signs {
        return realize_signs(ctx, a, signs);
    }
    let rows = uniform_class_rows();
    let checks = verify_class_rows(&rows);
    let mut text = String::new();
    let mut items = Vec::new();
    let mut ok = true;
    let mut certificate = None;
    for (row, check) in rows.iter().zip(&checks) {
        let need_lp = a.lp || check.status == RowStatus::NoMatrix;
        let lp = if need_lp { Some(bfp_certificate(&row.oriented()?)?) } else { None };
        let mut label = match &check.status {
            RowStatus::Verified => "verified".to_string(),
            RowStatus::NotPositiveDefinite => "not positive definite".to_string(),
            RowStatus::SignMismatch { computed } => format!("sign mismatch (computed {computed})"),
            RowStatus::NoMatrix => "no matrix".to_string(),
        };
        let mut item = serde_json::to_value(check)?;
        match &lp {
            Some((system, BfpOutcome::Infeasible(cert))) => {
                label.push_str(&format!("; log-linear system infeasible ({} inequalities)", cert.multipliers.len()));
                let cj = cert.to_json(system);
                item["certificate"] = serde_json::to_value(&cj)?;
                ok &= cert.verify(system) && check.status == RowStatus::NoMatrix;
                certificate.get_or_insert(cj);
            }
            Some((_, BfpOutcome::Feasible { .. })) => {
                label.push_str("; log-linear system feasible");
                item["log_linear"] = json!("feasible");
            }
            None => {}
        }
        ok &= matches!(check.status, RowStatus::Verified | RowStatus::NoMatrix);
        line(&mut text, format!("{:>2} {} {label}", row.id, row.signs));
        items.push(item);
    }
    if let (Some(path), Some(cj)) = (&a.certificate_out, &certificate) {
        std::fs::write(path, serde_json::to_string_pretty(cj)?)?;
    }
    Ok(Report::new(ok, text, json!({ "rows": items })))
}

fn realize_matrix(path: &Path) -> anyhow::Result<Report> {
    let json: MatrixJson = serde_json::from_str(&read_input(path)?).with_context(|| format!("in {}", path.display()))?;
    let sigma = SymmetricMatrix::from_json(&json)?;
    let gs = GroundSet::new(sigma.n())?;
    let sv = sign_vector(&sigma)?;
    let g = gaussoid_of_matrix(&gs, &sigma)?;
    let oriented = sv.oriented.is_oriented_gaussoid();
    let mut text = String::new();
    line(&mut text, format!("positive definite: {}", sv.positive_definite));
    line(&mut text, format!("signs: {}", sv.oriented.sign_string()));
    line(&mut text, format!("gaussoid: {}", g.gaussoid.to_text()));
    let summary = json!({
        "n": sigma.n(),
        "positive_definite": sv.positive_definite,
        "signs": sv.oriented.sign_string(),
        "gaussoid": g.gaussoid.to_text(),
        "oriented_gaussoid": oriented,
    });
    Ok(Report::new(sv.positive_definite && oriented, text, summary))
}

fn realize_signs(ctx: &Context, a: &RealizeArgs, signs: &str) -> anyhow::Result<Report> {
    let n = a.n.unwrap_or(4);
    let gs = GroundSet::new(n)?;
    let phi = OrientedGaussoid::from_sign_string(&gs, signs)?;
    let mut text = String::new();
    if let Some(t) = phi.first_violation() {
        line(&mut text, format!("oriented gaussoid: false ({t})"));
        return Ok(Report::new(false, text, json!({ "oriented_gaussoid": false, "violation": t.to_string() })));
    }
    let mut summary = json!({ "signs": phi.sign_string(), "oriented_gaussoid": true });
    if phi.is_uniform() {
        let (system, outcome) = bfp_certificate(&phi)?;
        if let BfpOutcome::Infeasible(cert) = &outcome {
            let cj = cert.to_json(&system);
            line(&mut text, "realizable: false");
            for ((m, ineq), t) in cj.multipliers.iter().zip(&cj.inequalities).zip(&cj.trinomials) {
                line(&mut text, format!("  {m} x [{ineq}]  from  {t}"));
            }
            if let Some(path) = &a.certificate_out {
                std::fs::write(path, serde_json::to_string_pretty(&cj)?)?;
            }
            summary["realizable"] = json!(false);
            summary["certificate"] = serde_json::to_value(&cj)?;
            return Ok(Report::new(true, text, summary));
        }
        line(&mut text, "log-linear system: feasible");
    }
    match search_realization(&phi, a.trials, ctx.seed, ctx.strategy) {
        Some(m) => {
            line(&mut text, "realizable: true");
            for i in 0..n {
                let row: Vec<String> = (0..n).map(|j| format_rational(m.get(i, j))).collect();
                line(&mut text, format!("  {}", row.join(" ")));
            }
            summary["realizable"] = json!(true);
            summary["matrix"] = matrix_rows(&m);
        }
        None => {
            line(&mut text, format!("realizable: unknown (no dyadic realization in {} trials)", a.trials));
            summary["realizable"] = Value::Null;
        }
    }
    Ok(Report::new(true, text, summary))
}

