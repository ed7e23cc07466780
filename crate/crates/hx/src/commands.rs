use std::path::Path;
use std::str::FromStr;

use hx_core::hecke::{in_catalog, weight_catalog};
use hx_core::positivity::{classify_positive, Fixture};
use hx_core::{
    Bond, CheckMode, CoxeterSystem, ElemId, Element, GroupTable, HeckeAlgebra, KlBasis,
    TypeLabel, WeightFunction,
};
use serde_json::{json, Value};

use crate::args::{Command, HeckeCommand, Job, JringCommand, KlCommand};
use crate::cache;
use crate::encode::{elem, int, poly, word};
use crate::fail::Failure;
use crate::pool::Pool;

/// A finished report; `verdict` decides the exit code after it is written.
pub struct Output {
    pub json: Value,
    pub csv: Vec<Vec<String>>,
    pub summary: Vec<String>,
    pub verdict: Result<(), Failure>,
}

impl Output {
    fn new(json: Value, csv: Vec<Vec<String>>) -> Self {
        Output { json, csv, summary: Vec::new(), verdict: Ok(()) }
    }
}

fn row<const N: usize>(cells: [&dyn ToString; N]) -> Vec<String> {
    cells.iter().map(|c| c.to_string()).collect()
}

fn head(names: &[&str]) -> Vec<String> {
    names.iter().map(|n| n.to_string()).collect()
}

fn progress(msg: impl AsRef<str>) {
    eprintln!("hx: {}", msg.as_ref());
}

fn parse_bond(v: &Value) -> Option<Bond> {
    match v {
        Value::Null => Some(Bond::Infinite),
        Value::String(s) if s == "inf" || s == "∞" => Some(Bond::Infinite),
        Value::Number(n) => match n.as_u64()? {
            0 => Some(Bond::Infinite),
            m => Some(Bond::Order(u32::try_from(m).ok()?)),
        },
        _ => None,
    }
}

fn read_matrix(path: &Path) -> Result<CoxeterSystem, Failure> {
    let bad = |m: String| Failure::Usage(format!("matrix {}: {m}", path.display()));
    let text = std::fs::read_to_string(path).map_err(|e| bad(e.to_string()))?;
    let v: Value = serde_json::from_str(&text).map_err(|e| bad(e.to_string()))?;
    let rows = v
        .as_array()
        .and_then(|rows| {
            rows.iter().map(|r| r.as_array()?.iter().map(parse_bond).collect::<Option<Vec<_>>>()).collect()
        })
        .ok_or_else(|| bad("expected an array of rows of integers, null or \"inf\"".into()))?;
    Ok(CoxeterSystem::from_matrix(rows)?)
}

fn system(job: &Job) -> Result<CoxeterSystem, Failure> {
    match (&job.type_label, &job.matrix) {
        (Some(l), _) => Ok(CoxeterSystem::from_label(l)?),
        (None, Some(p)) => read_matrix(p),
        (None, None) => Err(Failure::Usage("give --type or --matrix".into())),
    }
}

fn weight(job: &Job, sys: &CoxeterSystem) -> Result<WeightFunction, Failure> {
    match job.weights.as_deref().map(str::trim) {
        None | Some("equal") => Ok(WeightFunction::equal(sys)),
        Some(list) => {
            let values = list
                .split(',')
                .map(|t| t.trim().parse::<i64>())
                .collect::<Result<Vec<_>, _>>()
                .map_err(|_| Failure::Usage(format!("bad weights `{list}`")))?;
            Ok(WeightFunction::new(sys, &values)?)
        }
    }
}

fn parse_element(sys: &CoxeterSystem, s: &str) -> Result<Element, Failure> {
    let s = s.trim();
    if s.is_empty() || s == "e" {
        return Ok(sys.identity());
    }
    let word = s
        .split(',')
        .map(|t| t.trim().parse::<usize>())
        .collect::<Result<Vec<_>, _>>()
        .map_err(|_| Failure::Usage(format!("bad element `{s}`")))?;
    Ok(sys.normal_form(&word)?)
}

fn header(sys: &CoxeterSystem, w: &WeightFunction) -> (Value, Value) {
    (json!(sys.type_label()), json!(w.values()))
}

fn bond_value(b: Bond) -> Value {
    match b {
        Bond::Order(m) => json!(m),
        Bond::Infinite => json!("inf"),
    }
}

/// The whole group for finite systems, otherwise the ball of `radius`.
fn algebra(sys: &CoxeterSystem, w: WeightFunction, radius: Option<usize>) -> Result<HeckeAlgebra, Failure> {
    if sys.is_finite() {
        progress(format!("building group table ({} elements)", sys.order().unwrap_or(0)));
        return Ok(HeckeAlgebra::new(sys, w)?);
    }
    let r = radius.ok_or_else(|| Failure::Gating("infinite group: a radius is required".into()))?;
    progress(format!("building ball of radius {r}"));
    Ok(HeckeAlgebra::with_radius(sys, w, r)?)
}

fn require_finite(sys: &CoxeterSystem, what: &str) -> Result<(), Failure> {
    if sys.is_finite() {
        Ok(())
    } else {
        Err(Failure::Gating(format!("{what} needs a finite Weyl group")))
    }
}

fn with_cache<T>(kl: &KlBasis, body: impl FnOnce() -> Result<T, Failure>) -> Result<T, Failure> {
    let loaded = cache::load(kl);
    if loaded > 0 {
        progress(format!("loaded {loaded} KL elements from cache"));
    }
    let out = body();
    if out.is_ok() {
        cache::store(kl, loaded);
    }
    out
}

pub fn run(command: &Command, job: &Job, pool: &Pool) -> Result<Output, Failure> {
    match command {
        Command::Group => group(job),
        Command::Weights => weights(job),
        Command::Kl(KlCommand::Basis) => kl_basis(job, pool),
        Command::Kl(KlCommand::Hconst) => kl_hconst(job, pool),
        Command::Kl(KlCommand::Afunction) => kl_afunction(job, pool),
        Command::Jring(c) => jring(*c, job, pool),
        Command::Hecke(HeckeCommand::Fprobe) => fprobe(job, pool),
        Command::Positivity => positivity(job, pool),
    }
}

fn group(job: &Job) -> Result<Output, Failure> {
    let sys = system(job)?;
    if job.weights.is_some() {
        weight(job, &sys)?;
    }
    if !sys.is_finite() && job.max_length.is_none() {
        return Err(Failure::Gating("infinite group: give --max-length".into()));
    }
    let matrix: Vec<Vec<Value>> =
        sys.matrix().into_iter().map(|r| r.into_iter().map(bond_value).collect()).collect();
    let mut doc = json!({
        "type": sys.type_label(),
        "rank": sys.rank(),
        "coxeter_matrix": matrix,
        "finite": sys.is_finite(),
        "order": sys.order(),
    });
    let mut csv = Vec::new();
    if sys.is_finite() {
        let table = GroupTable::full(&sys)?;
        let classes = table.conjugacy_classes()?;
        csv.push(head(&["class", "representative", "size", "min_length", "centralizer_order"]));
        let mut list = Vec::new();
        for (i, c) in classes.iter().enumerate() {
            let rep = table.element(c.representative);
            csv.push(row([&i, rep, &c.size(), &c.min_length, &c.centralizer_order]));
            list.push(json!({
                "id": i,
                "representative": word(rep),
                "size": c.size(),
                "min_length": c.min_length,
                "minimal_count": c.minimal.len(),
                "centralizer_order": c.centralizer_order,
            }));
        }
        doc["classes"] = Value::Array(list);
        doc["longest"] = elem(&table, table.longest().expect("complete table"));
        if let Ok(sp) = table.special_elements() {
            doc["coxeter_element"] = word(&sp.coxeter_element);
            doc["longest_is_central"] = json!(sp.longest_is_central);
        }
    }
    if let Some(m) = job.max_length {
        let elems = sys.enumerate(Some(m))?;
        if !sys.is_finite() {
            csv.push(head(&["index", "element", "length"]));
            for (i, e) in elems.iter().enumerate() {
                csv.push(row([&i, e, &e.length()]));
            }
        }
        doc["max_length"] = json!(m);
        doc["elements"] = Value::Array(elems.iter().map(word).collect());
    }
    let mut out = Output::new(doc, csv);
    out.summary.push(match sys.order() {
        Some(n) => format!("order {n}"),
        None => format!("{} elements of length <= {}", out.json["elements"].as_array().map_or(0, Vec::len), job.max_length.unwrap_or(0)),
    });
    Ok(out)
}

fn weights(job: &Job) -> Result<Output, Failure> {
    let sys = system(job)?;
    let w = weight(job, &sys)?;
    let ty = sys.type_label().and_then(|l| TypeLabel::from_str(l).ok());
    let catalog = ty.and_then(|t| weight_catalog(&t));
    let listed = ty.filter(|_| catalog.is_some()).map(|t| in_catalog(&t, &w));
    let doc = json!({
        "type": sys.type_label(),
        "weights": w.values(),
        "equal_parameters": w.is_equal_parameters(),
        "catalog": catalog,
        "in_catalog": listed,
    });
    let vals: Vec<String> = w.values().iter().map(u32::to_string).collect();
    let csv = vec![
        head(&["type", "weights", "equal_parameters", "in_catalog"]),
        row([&sys.type_label().unwrap_or("-"), &vals.join(" "), &w.is_equal_parameters(), &listed.map_or("-".into(), |b| b.to_string())]),
    ];
    Ok(Output::new(doc, csv))
}

fn kl_basis(job: &Job, pool: &Pool) -> Result<Output, Failure> {
    let sys = system(job)?;
    let w = weight(job, &sys)?;
    let (ty, wv) = header(&sys, &w);
    let elems: Vec<Element> = job.elements.iter().map(|s| parse_element(&sys, s)).collect::<Result<_, _>>()?;
    if elems.is_empty() {
        require_finite(&sys, "the full KL basis")?;
    }
    let need = elems.iter().map(Element::length).max().unwrap_or(0).max(job.radius.unwrap_or(0));
    let kl = KlBasis::new(algebra(&sys, w, Some(need))?);
    let table = kl.algebra().table();
    let ids: Vec<ElemId> = if elems.is_empty() {
        table.ids().collect()
    } else {
        elems.iter().map(|e| kl.algebra().id(e)).collect::<Result<_, _>>()?
    };
    let basis = with_cache(&kl, || {
        if elems.is_empty() {
            progress(format!("computing {} KL elements", ids.len()));
            kl.precompute(pool)?;
        }
        ids.iter().map(|&id| Ok(kl.element(id)?.clone())).collect::<Result<Vec<_>, Failure>>()
    })?;
    let mut csv = vec![head(&["w", "y", "p"])];
    let mut list = Vec::new();
    for c in &basis {
        let terms: Vec<Value> = c.coords.iter().map(|(y, p)| json!([elem(table, *y), poly(p)])).collect();
        for (y, p) in &c.coords {
            csv.push(row([table.element(c.top), table.element(*y), p]));
        }
        list.push(json!({ "w": elem(table, c.top), "terms": terms }));
    }
    Ok(Output::new(json!({ "type": ty, "weights": wv, "basis": list }), csv))
}

fn kl_hconst(job: &Job, _pool: &Pool) -> Result<Output, Failure> {
    let sys = system(job)?;
    let w = weight(job, &sys)?;
    let (ty, wv) = header(&sys, &w);
    let [x, y]: [Element; 2] = job
        .elements
        .iter()
        .map(|s| parse_element(&sys, s))
        .collect::<Result<Vec<_>, _>>()?
        .try_into()
        .map_err(|_| Failure::Usage("hconst takes exactly two --element values".into()))?;
    let need = (x.length() + y.length()).max(job.radius.unwrap_or(0));
    let kl = KlBasis::new(algebra(&sys, w, Some(need))?);
    let (xi, yi) = (kl.algebra().id(&x)?, kl.algebra().id(&y)?);
    let h = with_cache(&kl, || Ok(kl.h_constants(xi, yi)?))?;
    let table = kl.algebra().table();
    let mut csv = vec![head(&["z", "h"])];
    for (z, p) in &h {
        csv.push(row([table.element(*z), p]));
    }
    let terms: Vec<Value> = h.iter().map(|(z, p)| json!([elem(table, *z), poly(p)])).collect();
    Ok(Output::new(json!({ "type": ty, "weights": wv, "x": word(&x), "y": word(&y), "terms": terms }), csv))
}

fn finite_kl(job: &Job, what: &str) -> Result<(KlBasis, Value, Value), Failure> {
    let sys = system(job)?;
    require_finite(&sys, what)?;
    let w = weight(job, &sys)?;
    let (ty, wv) = header(&sys, &w);
    Ok((KlBasis::new(algebra(&sys, w, None)?), ty, wv))
}

fn kl_afunction(job: &Job, pool: &Pool) -> Result<Output, Failure> {
    let (kl, ty, wv) = finite_kl(job, "the a-function")?;
    progress(format!("scanning {} columns for the a-function ({} threads)", kl.algebra().dim(), pool.threads()));
    let a = with_cache(&kl, || Ok(kl.a_function(pool)?))?;
    let table = kl.algebra().table();
    let mut csv = vec![head(&["w", "a", "x", "y"])];
    let mut list = Vec::new();
    for z in table.ids() {
        let (x, y) = a.witness[z.index()];
        csv.push(row([table.element(z), &a.get(z), table.element(x), table.element(y)]));
        list.push(json!({ "w": elem(table, z), "a": a.get(z), "witness": [elem(table, x), elem(table, y)] }));
    }
    let mut out = Output::new(json!({ "type": ty, "weights": wv, "values": list }), csv);
    let mut distinct: Vec<i32> = a.values.clone();
    distinct.sort_unstable();
    distinct.dedup();
    out.summary.push(format!("a-values {distinct:?}"));
    Ok(out)
}

fn jring(command: JringCommand, job: &Job, pool: &Pool) -> Result<Output, Failure> {
    let (kl, ty, wv) = finite_kl(job, "the ring J")?;
    let equal = kl.algebra().weight().is_equal_parameters();
    progress(format!("computing a-function and J over {} elements", kl.algebra().dim()));
    let (_, j) = with_cache(&kl, || {
        let a = kl.a_function(pool)?;
        let j = kl.j_ring(&a, pool)?;
        Ok((a, j))
    })?;
    let table = kl.algebra().table();
    let n = j.order();
    match command {
        JringCommand::Table => {
            let mut csv = vec![head(&["x", "y", "z", "gamma"])];
            let mut list = Vec::new();
            for (x, y, z, g) in j.entries() {
                csv.push(row([table.element(x), table.element(y), table.element(z), g]));
                list.push(json!([elem(table, x), elem(table, y), elem(table, z), int(g)]));
            }
            let doc = json!({ "type": ty, "weights": wv, "order": n, "products": list });
            Ok(Output::new(doc, csv))
        }
        JringCommand::Check => {
            let mut mode = CheckMode::auto(n, job.exhaustive, job.seed);
            if let (CheckMode::Sampled { count, .. }, Some(s)) = (&mut mode, job.samples) {
                *count = s;
            }
            let report = j.associativity_check(mode, pool);
            let (mode_name, seed) = match mode {
                CheckMode::Exhaustive => ("exhaustive", None),
                CheckMode::Sampled { seed, .. } => ("sampled", Some(seed)),
            };
            let cex = report.counterexample.map(|(x, y, z)| json!([elem(table, x), elem(table, y), elem(table, z)]));
            let doc = json!({
                "type": ty, "weights": wv, "order": n,
                "mode": mode_name, "seed": seed,
                "triples_checked": report.triples_checked,
                "passed": report.passed(),
                "counterexample": cex,
            });
            let csv = vec![
                head(&["mode", "triples_checked", "passed"]),
                row([&mode_name, &report.triples_checked, &report.passed()]),
            ];
            let mut out = Output::new(doc, csv);
            out.summary.push(format!(
                "associativity {} over {} triples",
                if report.passed() { "passed" } else { "FAILED" },
                report.triples_checked
            ));
            if !report.passed() && equal {
                out.verdict = Err(Failure::Internal("J is not associative for equal parameters".into()));
            }
            Ok(out)
        }
        JringCommand::Unit => {
            let unit = j.find_unit();
            let terms = unit.as_ref().map(|u| u.iter().map(|(w, c)| json!([elem(table, *w), int(c)])).collect::<Vec<_>>());
            let doc = json!({ "type": ty, "weights": wv, "order": n, "found": unit.is_some(), "unit": terms });
            let mut csv = vec![head(&["w", "coefficient"])];
            for (w, c) in unit.iter().flatten() {
                csv.push(row([table.element(*w), c]));
            }
            let mut out = Output::new(doc, csv);
            out.summary.push(match &unit {
                Some(u) => format!("unit found with {} terms", u.len()),
                None => "no unit".into(),
            });
            if unit.is_none() && equal {
                out.verdict = Err(Failure::Internal("J has no unit for equal parameters".into()));
            }
            Ok(out)
        }
    }
}

fn fprobe(job: &Job, pool: &Pool) -> Result<Output, Failure> {
    let sys = system(job)?;
    let w = weight(job, &sys)?;
    let (ty, wv) = header(&sys, &w);
    if !sys.is_finite() && job.radius.is_none() {
        return Err(Failure::Gating("infinite group: give --radius".into()));
    }
    let alg = algebra(&sys, w, job.radius.map(|r| 2 * r))?;
    progress(format!("probing f_{{x,y,z}} ({} threads)", pool.threads()));
    let p = alg.f_bound_probe(job.radius, pool)?;
    let table = alg.table();
    let (x, y, z) = p.witness;
    let doc = json!({
        "type": ty, "weights": wv,
        "radius": p.radius,
        "n_emp": p.max_degree,
        "witness": [elem(table, x), elem(table, y), elem(table, z)],
        "pairs_scanned": p.pairs_scanned,
    });
    let radius = p.radius.map_or("-".to_string(), |r| r.to_string());
    let csv = vec![
        head(&["radius", "n_emp", "x", "y", "z", "pairs_scanned"]),
        row([&radius, &p.max_degree, table.element(x), table.element(y), table.element(z), &p.pairs_scanned]),
    ];
    let mut out = Output::new(doc, csv);
    out.summary.push(format!("N_emp = {}", p.max_degree));
    Ok(out)
}

fn fixture_name(f: Fixture) -> &'static str {
    match f {
        Fixture::Identity => "identity",
        Fixture::Coxeter => "coxeter",
        Fixture::CentralLongest => "central_longest",
    }
}

fn positivity(job: &Job, pool: &Pool) -> Result<Output, Failure> {
    let sys = system(job)?;
    require_finite(&sys, "positivity")?;
    let w = weight(job, &sys)?;
    if !w.is_equal_parameters() {
        return Err(Failure::Gating("positivity is defined for equal parameters only".into()));
    }
    let alg = algebra(&sys, w, None)?;
    let reports = classify_positive(&alg, job.per_class, pool, |done, total| {
        progress(format!("class {done}/{total}"));
    })?;
    let mut csv = vec![head(&["class", "size", "min_length", "positive", "n_at_1"])];
    let mut list = Vec::new();
    let mut positive = Vec::new();
    for r in &reports {
        let at_one = r.n_poly.eval_at_one();
        csv.push(row([&r.class_id, &r.class_size, &r.min_length, &r.positive, &at_one]));
        if r.positive {
            positive.push(format!("{} ({})", r.class_id, r.representative));
        }
        list.push(json!({
            "class_id": r.class_id,
            "representative": word(&r.representative),
            "class_size": r.class_size,
            "min_length": r.min_length,
            "n_poly": poly(&r.n_poly),
            "positive": r.positive,
            "centralizer_order": r.centralizer_order,
            "checks": {
                "constant_on_minimal": r.checks.constant_on_minimal,
                "even": r.checks.even,
                "centralizer_identity": r.checks.centralizer_identity,
            },
            "evaluated": r.evaluated,
            "fixtures": r.fixtures.iter().map(|&f| fixture_name(f)).collect::<Vec<_>>(),
        }));
    }
    let mut out = Output::new(Value::Array(list), csv);
    out.summary.push(format!("positive classes: {}", positive.join(", ")));
    Ok(out)
}
