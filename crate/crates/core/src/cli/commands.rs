use std::collections::BTreeMap;
use std::fmt::{Display, Write};

use serde_json::{json, Map, Value};

use super::{CliError, Command, FormatCheck, NodesCommand, Report, SeriesArgs};
use crate::geometry::{
    build_web, ci_series, determinantal_length, known_family_counts, numerator_over, standard_choice_nodes,
    unproject_term, weighted_bezout, ConifoldLedger, DeterminantalData,
};
use crate::orbifold::{Basket, ContributionRegistry, InitialData, OrbifoldError};
use crate::pfaffian::{
    maximal_pfaffians, numerator_overlaps, parse_format_file, pfaffian_numerator, satisfies, solve_entry_weights,
    Format, SkewDegreeMatrix5,
};
use crate::recognition::{
    analyse, search, Analysis, EmbeddingCandidate, EquationSource, RecognitionConfig, SearchQuery, SearchRow,
};
use crate::series::{IntPolynomial, RationalSeries, WeightVector};

pub(super) fn dispatch(cmd: &Command) -> Result<Report, CliError> {
    match cmd {
        Command::Rr { series, expand } => rr(series, *expand),
        Command::Recognize { series, hints, max_weights, order } => {
            let cfg = RecognitionConfig {
                expansion_order: *order,
                max_weights: *max_weights,
                hint_weights: hints.clone().map(|h| h.0).unwrap_or_default(),
            };
            recognize(series, &cfg)
        }
        Command::Search { p1, p2, n, m, tuples, max_weights } => {
            let query = if tuples.is_empty() {
                match (p1, p2, n, m) {
                    (Some(a), Some(b), Some(c), Some(d)) => {
                        SearchQuery::grid(a.clone(), b.clone(), c.clone(), d.clone())
                    }
                    _ => return Err(CliError::Usage("search needs --p1, --p2, --n and --m, or --tuple".into())),
                }
            } else {
                SearchQuery { tuples: tuples.clone() }
            };
            let cfg = RecognitionConfig { max_weights: *max_weights, ..RecognitionConfig::default() };
            Ok(search_report(&search(&query, &cfg)))
        }
        Command::Pfaffian { degrees } => pfaffian(degrees),
        Command::Format { file, check, i, j } => format_check(file, *check, *i, *j),
        Command::Nodes { command } => nodes(command),
        Command::Unproject { terms, ambient, equations, over, p1, p2, basket, expand } => {
            let mut total = match (ambient, equations) {
                (Some(a), eq) => {
                    let w = WeightVector::new(a.0.clone()).map_err(|e| CliError::Usage(e.to_string()))?;
                    ci_series(&w, &eq.clone().unwrap_or_default().0)
                }
                (None, Some(_)) => return Err(CliError::Usage("--equations needs --ambient".into())),
                (None, None) => RationalSeries::zero(),
            };
            for (plane, s) in terms {
                total = total.add(&unproject_term(*plane, *s));
            }
            let compare = match (p1, p2) {
                (Some(p1), Some(p2)) => {
                    Some(assembled(&SeriesArgs { p1: *p1, p2: *p2, basket: basket.clone().unwrap_or_default() })?)
                }
                (None, None) if basket.is_none() => None,
                _ => return Err(CliError::Usage("comparison needs both --p1 and --p2".into())),
            };
            unproject(&total, over.as_ref().map(|o| &o.0), compare.as_ref(), *expand)
        }
        Command::Chi { start, steps } => {
            let mut ledger = ConifoldLedger::new(*start);
            for s in steps {
                ledger.push(*s);
            }
            Ok(chi(&ledger))
        }
        Command::Web { p1, p2, n, m } => {
            let rows =
                search(&SearchQuery::grid(*p1..=*p1, *p2..=*p2, n.clone(), m.clone()), &RecognitionConfig::default());
            let families = if (*p1, *p2) == (3, 6) { known_family_counts() } else { BTreeMap::new() };
            Ok(web(&rows, &families))
        }
    }
}

fn s(x: impl Display) -> Value {
    Value::String(x.to_string())
}

fn list<T: Display>(xs: impl IntoIterator<Item = T>) -> Value {
    Value::Array(xs.into_iter().map(s).collect())
}

fn joined<T: Display>(xs: impl IntoIterator<Item = T>) -> String {
    xs.into_iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

fn poly_terms(p: &IntPolynomial) -> Value {
    Value::Array(p.terms().map(|(e, c)| json!([e.to_string(), c.to_string()])).collect())
}

fn series_json(p: &RationalSeries) -> Value {
    json!({
        "text": p.to_string(),
        "numerator": poly_terms(&p.numerator),
        "denominator_weights": list(p.denominator.as_slice()),
    })
}

fn orbifold_error(e: OrbifoldError) -> CliError {
    match e {
        OrbifoldError::UnsupportedSingularity(_) => CliError::Domain(e.to_string()),
        OrbifoldError::InvalidSingularity { .. } | OrbifoldError::Parse(_) => CliError::Usage(e.to_string()),
    }
}

fn parse_basket(text: &str) -> Result<Basket, CliError> {
    text.parse::<Basket>().map_err(orbifold_error)
}

fn assembled(a: &SeriesArgs) -> Result<RationalSeries, CliError> {
    let basket = parse_basket(&a.basket)?;
    ContributionRegistry::default().assemble(InitialData { p1: a.p1, p2: a.p2 }, &basket).map_err(orbifold_error)
}

fn rr(a: &SeriesArgs, expand: Option<usize>) -> Result<Report, CliError> {
    let p = assembled(a)?;
    let mut fields = Map::new();
    let mut pretty = format!("P = {p}\n");
    fields.insert("series".into(), series_json(&p));
    if let Ok((order, lead)) = p.leading_coefficient_at_one() {
        fields.insert("pole_order".into(), s(order));
        fields.insert("leading_coefficient".into(), s(&lead));
        let _ = writeln!(pretty, "pole order {order} at t = 1, leading coefficient {lead}");
    }
    if let Some(n) = expand {
        let t = p.expand(n);
        fields.insert("expansion".into(), list(t.coefficients()));
        let _ = writeln!(
            pretty,
            "expansion: {}",
            t.coefficients().iter().map(|c| c.to_string()).collect::<Vec<_>>().join(", ")
        );
    }
    Ok(Report { command: "rr", fields, pretty, ..Report::default() })
}

fn source_label(src: &EquationSource) -> String {
    match src {
        EquationSource::Numerator => "numerator".into(),
        EquationSource::ShapeFit => "shape fit".into(),
        EquationSource::UnprojectionSeed(q) => format!("projection from {q}"),
        EquationSource::LeadingBlock => "leading negative block".into(),
        EquationSource::Unfitted(e) => format!("unfitted ({e})"),
    }
}

fn candidate_json(c: &EmbeddingCandidate) -> Value {
    json!({
        "weights": list(c.weights.as_slice()),
        "ambient": c.weights.ambient_notation(),
        "description": c.describe(),
        "numerator": c.numerator.to_string(),
        "numerator_terms": poly_terms(&c.numerator),
        "k": s(c.k),
        "codim": s(c.codim),
        "degree_a3": s(&c.degree_a3),
        "equation_degrees": list(&c.equation_degrees),
        "syzygy_degrees": list(&c.syzygy_degrees),
        "equation_source": source_label(&c.source),
        "shape_fit_alternatives": s(c.alternatives),
        "hints_used": list(&c.hints_used),
        "advisories": Value::Array(c.advisories.iter().map(|a| json!({
            "from": a.from,
            "threshold": s(&a.threshold),
            "expected_index": s(a.expected_index),
            "satisfied": a.satisfied,
        })).collect()),
    })
}

fn candidate_pretty(c: &EmbeddingCandidate) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{}", c.describe());
    let _ = writeln!(out, "  weights      {}", c.weights);
    let _ = writeln!(out, "  numerator    {}", c.numerator);
    let _ = writeln!(out, "  k = {}, codim = {}, A^3 = {}", c.k, c.codim, c.degree_a3);
    let _ = writeln!(out, "  equations    {}  ({})", joined(&c.equation_degrees), source_label(&c.source));
    if !c.syzygy_degrees.is_empty() {
        let _ = writeln!(out, "  syzygies     {}", joined(&c.syzygy_degrees));
    }
    if c.alternatives > 1 {
        let _ = writeln!(out, "  {} equally balanced shape fits", c.alternatives);
    }
    if !c.hints_used.is_empty() {
        let _ = writeln!(out, "  hints        {}", joined(&c.hints_used));
    }
    for a in &c.advisories {
        let verdict = if a.satisfied { "present" } else { "MISSING" };
        let _ = writeln!(
            out,
            "  projection from {} (A^3 > {}): weight divisible by {} {}",
            a.from, a.threshold, a.expected_index, verdict
        );
    }
    out
}

fn recognize(a: &SeriesArgs, cfg: &RecognitionConfig) -> Result<Report, CliError> {
    let basket = parse_basket(&a.basket)?;
    let analysis = analyse(InitialData { p1: a.p1, p2: a.p2 }, &basket, &ContributionRegistry::default(), cfg)
        .map_err(orbifold_error)?;
    let mut fields = Map::new();
    fields.insert("status".into(), analysis.status().into());
    let mut pretty = format!("status: {}\n", analysis.status());
    if let Some(c) = analysis.candidate() {
        fields.insert("candidate".into(), candidate_json(c));
        pretty.push_str(&candidate_pretty(c));
    }
    let failure = match &analysis {
        Analysis::Embedded(_) => None,
        Analysis::HighCodimension { reason, .. } => {
            fields.insert("reason".into(), reason.clone().into());
            let _ = writeln!(pretty, "reason: {reason}");
            None
        }
        Analysis::NonArising { reason } | Analysis::Failed { reason } => {
            fields.insert("reason".into(), reason.clone().into());
            let _ = writeln!(pretty, "reason: {reason}");
            Some(reason.clone())
        }
    };
    Ok(Report { command: "recognize", fields, pretty, failure, ..Report::default() })
}

fn row_cells(r: &SearchRow) -> [String; 8] {
    let c = r.analysis.candidate();
    [
        r.p1.to_string(),
        r.p2.to_string(),
        r.n.to_string(),
        r.m.to_string(),
        c.map(|c| c.weights.to_string()).unwrap_or_default(),
        c.map(|c| joined(&c.equation_degrees)).unwrap_or_default(),
        c.map(|c| c.codim.to_string()).unwrap_or_default(),
        r.analysis.status(),
    ]
}

const SEARCH_COLUMNS: [&str; 8] = ["P1", "P2", "n", "m", "weights", "equation_degrees", "codim", "status"];

pub(super) fn search_report(rows: &[SearchRow]) -> Report {
    let mut tsv = SEARCH_COLUMNS.join("\t");
    tsv.push('\n');
    let mut json_rows = Vec::new();
    let mut pretty = String::new();
    for r in rows {
        let cells = row_cells(r);
        tsv.push_str(&cells.join("\t"));
        tsv.push('\n');
        let mut obj = Map::new();
        for (k, v) in SEARCH_COLUMNS.iter().zip(&cells) {
            obj.insert((*k).to_string(), v.clone().into());
        }
        if let Some(c) = r.analysis.candidate() {
            obj.insert("candidate".into(), candidate_json(c));
        }
        if let Analysis::HighCodimension { reason, .. }
        | Analysis::NonArising { reason }
        | Analysis::Failed { reason } = &r.analysis
        {
            obj.insert("reason".into(), reason.clone().into());
        }
        json_rows.push(Value::Object(obj));
        let what = match &r.analysis {
            Analysis::Embedded(c) => c.describe(),
            Analysis::HighCodimension { .. } => "-".into(),
            Analysis::NonArising { reason } | Analysis::Failed { reason } => reason.clone(),
        };
        let _ =
            writeln!(pretty, "({:>2},{:>2},{:>2},{:>2})  {:<32} {}", r.p1, r.p2, r.n, r.m, r.analysis.status(), what);
    }
    let mut fields = Map::new();
    fields.insert("rows".into(), Value::Array(json_rows));
    Report { command: "search", fields, pretty, tsv: Some(tsv), ..Report::default() }
}

fn pfaffian(text: &str) -> Result<Report, CliError> {
    let d: SkewDegreeMatrix5 =
        text.parse().map_err(|e: crate::pfaffian::PfaffianError| CliError::Usage(e.to_string()))?;
    let w = solve_entry_weights(&d).map_err(|e| CliError::Domain(e.to_string()))?;
    let n = pfaffian_numerator(&w.pfaffian_degrees, w.k).map_err(|e| CliError::Domain(e.to_string()))?;
    let overlaps = numerator_overlaps(&w.pfaffian_degrees, w.k);
    let mut fields = Map::new();
    fields.insert("degree_matrix".into(), s(d));
    fields.insert("q".into(), list(w.q));
    fields.insert("pfaffian_degrees".into(), list(w.pfaffian_degrees));
    fields.insert("k".into(), s(w.k));
    fields.insert("numerator".into(), n.to_string().into());
    fields.insert("numerator_terms".into(), poly_terms(&n));
    fields.insert("cancelled_pairs".into(), s(overlaps));
    let mut pretty = String::new();
    let _ = writeln!(pretty, "q          = ({})", joined(w.q));
    let _ = writeln!(pretty, "Pfaffians  = degrees {}", joined(w.pfaffian_degrees));
    let _ = writeln!(pretty, "k          = {}", w.k);
    let _ = writeln!(pretty, "numerator  = {n}");
    if overlaps > 0 {
        let _ = writeln!(pretty, "({overlaps} equation/syzygy pairs cancel)");
    }
    Ok(Report { command: "pfaffian", fields, pretty, ..Report::default() })
}

fn formats_to_check(check: FormatCheck, i: Option<usize>, j: Option<usize>) -> Result<Vec<Format>, CliError> {
    let bad = |x: usize| !(1..=5).contains(&x);
    if i.is_some_and(bad) || j.is_some_and(bad) {
        return Err(CliError::Usage("--i and --j must lie in 1..5".into()));
    }
    let toms = |i: Option<usize>| match i {
        Some(i) => vec![Format::Tom(i)],
        None => (1..=5).map(Format::Tom).collect(),
    };
    let jerries = |i: Option<usize>, j: Option<usize>| -> Result<Vec<Format>, CliError> {
        match (i, j) {
            (Some(i), Some(j)) if i == j => Err(CliError::Usage("Jerry needs --i different from --j".into())),
            (Some(i), Some(j)) => Ok(vec![Format::Jerry(i.min(j), i.max(j))]),
            (None, None) => Ok((1..=5).flat_map(|i| (i + 1..=5).map(move |j| Format::Jerry(i, j))).collect()),
            _ => Err(CliError::Usage("Jerry needs both --i and --j, or neither".into())),
        }
    };
    Ok(match check {
        FormatCheck::Tom => {
            if j.is_some() {
                return Err(CliError::Usage("Tom takes only --i".into()));
            }
            toms(i)
        }
        FormatCheck::Jerry => jerries(i, j)?,
        FormatCheck::All => {
            if i.is_some() || j.is_some() {
                return Err(CliError::Usage("--check all takes no indices".into()));
            }
            let mut v = toms(None);
            v.extend(jerries(None, None)?);
            v
        }
    })
}

fn format_check(
    path: &std::path::Path,
    check: FormatCheck,
    i: Option<usize>,
    j: Option<usize>,
) -> Result<Report, CliError> {
    let formats = formats_to_check(check, i, j)?;
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
    let file = parse_format_file(&text).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
    let m = file.matrix.as_ref().ok_or_else(|| CliError::Usage("file declares no matrix".into()))?;
    let ideal = file.ideal().map_err(|e| CliError::Domain(e.to_string()))?;
    let mut fields = Map::new();
    let mut pretty = String::new();
    let mut verdicts = Map::new();
    for f in formats {
        let ok = satisfies(m, &ideal, f);
        verdicts.insert(f.to_string(), ok.into());
        let _ = writeln!(pretty, "{f:<7} {}", if ok { "yes" } else { "no" });
    }
    fields.insert("verdicts".into(), Value::Object(verdicts));
    let pf = maximal_pfaffians(m);
    fields.insert("pfaffians".into(), list(&pf));
    let _ = writeln!(pretty, "maximal Pfaffians:");
    for (k, p) in pf.iter().enumerate() {
        let _ = writeln!(pretty, "  Pf_{} = {p}", k + 1);
    }
    Ok(Report { command: "format", fields, pretty, ..Report::default() })
}

fn geometry_error(e: crate::geometry::GeometryError) -> CliError {
    CliError::Domain(e.to_string())
}

fn nodes(cmd: &NodesCommand) -> Result<Report, CliError> {
    let mut fields = Map::new();
    let pretty = match cmd {
        NodesCommand::Bezout { d, e, plane } => {
            let n = weighted_bezout(*d, *e, *plane);
            fields.insert("count".into(), s(&n));
            fields.insert("integral".into(), n.is_integer().into());
            let flag = if n.is_integer() { "" } else { " (not integral)" };
            format!("{d} * {e} on {plane}: {n}{flag}\n")
        }
        NodesCommand::Determinantal { rows, cols, plane } => {
            let dd = DeterminantalData { row_degrees: *rows, col_degrees: *cols, plane: *plane };
            let len = determinantal_length(&dd).map_err(geometry_error)?;
            let num = dd.numerator().map_err(geometry_error)?;
            fields.insert("length".into(), s(&len));
            fields.insert("numerator".into(), num.to_string().into());
            format!("rank-drop locus on {plane}: numerator {num}, length {len}\n")
        }
        NodesCommand::StandardChoice { divisors, shared } => {
            let r = standard_choice_nodes(divisors, *shared).map_err(geometry_error)?;
            let mut out = String::new();
            let mut counts = Map::new();
            for (name, c) in &r.counts {
                counts.insert(name.clone(), s(c));
                let _ = writeln!(out, "{name}: {c}");
            }
            let _ = writeln!(out, "shared: {}\ntotal: {}", r.shared, r.total);
            fields.insert("counts".into(), Value::Object(counts));
            fields.insert("shared".into(), s(r.shared));
            fields.insert("total".into(), s(r.total));
            out
        }
    };
    Ok(Report { command: "nodes", fields, pretty, ..Report::default() })
}

fn unproject(
    total: &RationalSeries,
    over: Option<&Vec<u32>>,
    compare: Option<&RationalSeries>,
    expand: Option<usize>,
) -> Result<Report, CliError> {
    let mut fields = Map::new();
    let reduced = total.reduced();
    fields.insert("series".into(), series_json(&reduced));
    let mut pretty = format!("P = {reduced}\n");
    if let Some(w) = over {
        let target = WeightVector::new(w.clone()).map_err(|e| CliError::Usage(e.to_string()))?;
        let n = numerator_over(total, &target)
            .ok_or_else(|| CliError::Domain(format!("series has no polynomial numerator over ({target})")))?;
        fields.insert("numerator_over".into(), json!({"weights": list(target.as_slice()), "numerator": n.to_string()}));
        let _ = writeln!(pretty, "numerator over ({target}): {n}");
    }
    if let Some(c) = compare {
        let eq = total.equals(c);
        fields.insert("equals_rr".into(), eq.into());
        let _ = writeln!(pretty, "equals orbifold series: {}", if eq { "yes" } else { "no" });
    }
    if let Some(n) = expand {
        let t = total.expand(n);
        fields.insert("expansion".into(), list(t.coefficients()));
        let _ = writeln!(pretty, "expansion: {}", joined(t.coefficients()));
    }
    Ok(Report { command: "unproject", fields, pretty, ..Report::default() })
}

fn chi(ledger: &ConifoldLedger) -> Report {
    let mut pretty = format!("start: {}\n", ledger.chi_smooth);
    let mut steps = Vec::new();
    for (step, value) in &ledger.steps {
        let _ = writeln!(pretty, "{step}: {value}");
        steps.push(json!({"step": step.to_string(), "chi": s(value)}));
    }
    let _ = writeln!(pretty, "final: {} (convention-dependent; differences are meaningful)", ledger.current());
    let mut fields = Map::new();
    fields.insert("start".into(), s(ledger.chi_smooth));
    fields.insert("steps".into(), Value::Array(steps));
    fields.insert("final".into(), s(ledger.current()));
    fields.insert("absolute_values".into(), "convention-dependent".into());
    Report { command: "chi", fields, pretty, ..Report::default() }
}

fn web(rows: &[SearchRow], families: &BTreeMap<(u32, u32), u32>) -> Report {
    let g = build_web(rows, families);
    let connected = g.is_connected();
    let mut fields = Map::new();
    fields.insert(
        "nodes".into(),
        Value::Array(
            g.nodes
                .iter()
                .map(|((n, m), node)| {
                    json!({
                        "n": s(n), "m": s(m), "codim": s(node.codim), "label": node.label,
                        "families": node.families.map(s).unwrap_or(Value::Null),
                    })
                })
                .collect(),
        ),
    );
    fields.insert(
        "edges".into(),
        Value::Array(
            g.edges
                .iter()
                .map(|e| json!({"from": [s(e.from.0), s(e.from.1)], "to": [s(e.to.0), s(e.to.1)], "label": e.label}))
                .collect(),
        ),
    );
    fields.insert("connected".into(), connected.into());
    let mut pretty = format!("{} families, {} projections, connected: {connected}\n", g.nodes.len(), g.edges.len());
    for e in &g.edges {
        let _ = writeln!(pretty, "  ({},{}) -> ({},{})  {}", e.from.0, e.from.1, e.to.0, e.to.1, e.label);
    }
    Report { command: "web", fields, pretty, dot: Some(g.to_dot()), ..Report::default() }
}
