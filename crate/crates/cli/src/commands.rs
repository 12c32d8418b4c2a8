use std::fmt::Write as _;
use std::io::Read;

use anyhow::{anyhow, Context};
use serde_json::{json, Value};
use specgap::covers::preimages;
use specgap::decomp::triangle_decompositions;
use specgap::enumerate::classify_gap;
use specgap::families::{self, sporadic, sporadic_all, FamilyTag, SporadicEntry};
use specgap::graph6::parse_graph6_lines;
use specgap::spectra::{gm_spectrum_check, verify_sameeigs_identity};
use specgap::transforms::{bipartite_double, distance_two_graph, line_graph};
use specgap::{
    are_isomorphic, certify_gap, char_poly, count_roots_open, to_graph6, BigRat, Graph, IntPoly,
};

use crate::{Cli, Command, Input, Kind};

pub enum Failure {
    Usage(anyhow::Error),
    Verification { out: String, message: String },
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::Usage(e)
    }
}

type Out = Result<String, Failure>;

fn read_graphs(input: &Input) -> anyhow::Result<Vec<Graph>> {
    let text = match &input.input {
        Some(path) => {
            std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?
        }
        None => {
            let mut s = String::new();
            std::io::stdin()
                .read_to_string(&mut s)
                .context("reading stdin")?;
            s
        }
    };
    parse_graph6_lines(&text).map_err(|(line, e)| anyhow!("line {line}: {e}"))
}

fn parse_list(text: &str) -> anyhow::Result<Vec<usize>> {
    text.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| s.parse().with_context(|| format!("bad vertex {s:?}")))
        .collect()
}

fn parse_rat(text: &str) -> anyhow::Result<BigRat> {
    text.trim()
        .parse()
        .map_err(|_| anyhow!("bad rational {text:?}"))
}

fn lines(v: impl IntoIterator<Item = String>) -> String {
    v.into_iter().map(|s| s + "\n").collect()
}

fn json_lines(v: impl IntoIterator<Item = Value>) -> String {
    lines(v.into_iter().map(|x| x.to_string()))
}

fn pretty(v: &impl serde::Serialize) -> String {
    serde_json::to_string_pretty(v).expect("serializable") + "\n"
}

pub fn run(cli: &Cli) -> Out {
    let json = cli.json;
    match &cli.command {
        Command::Family { kind, k, graph6 } => family(*kind, *k, *graph6, json),
        Command::Sporadic { id, .. } => sporadic_rows(*id, json),
        Command::Certify(input) => certify(input, json),
        Command::Charpoly(input) => charpoly(input, json),
        Command::Sturm {
            poly,
            a,
            b,
            multiplicity,
        } => sturm(poly, a, b, *multiplicity, json),
        Command::Double(input) => transform(input, json, |g| Ok(bipartite_double(g)?)),
        Command::D2(input) => transform(input, json, |g| Ok(distance_two_graph(g))),
        Command::Linegraph(input) => transform(input, json, |g| Ok(line_graph(g)?)),
        Command::Truncate { input, vertices } => {
            let s = parse_list(vertices)?;
            transform(input, json, |g| Ok(families::truncate(g, &s)?))
        }
        Command::Preimages(input) => covers(input, json),
        Command::Decompose {
            input,
            limit,
            labelled,
        } => decompose(input, *limit, *labelled, json),
        Command::Classify { max_n, jobs } => classify(*max_n, *jobs, json),
        Command::VerifyIdentities { k_max } => verify(*k_max, json),
    }
}

fn family(kind: Kind, k: usize, graph6: bool, json: bool) -> Out {
    let tag = match kind {
        Kind::Base => FamilyTag::Base(k),
        Kind::Ks => FamilyTag::KollarSarnak(k),
        Kind::Gm => FamilyTag::GuoMohar(k),
    };
    let g = families::family_graph(tag).map_err(anyhow::Error::from)?;
    let g6 = to_graph6(&g);
    if json {
        let v = json!({"tag": tag.to_string(), "n": g.order(), "edges": g.edges(), "graph6": g6});
        return Ok(pretty(&v));
    }
    if graph6 {
        return Ok(g6 + "\n");
    }
    let mut s = format!("{tag}: {} vertices, {} edges\n", g.order(), g.edge_count());
    for (u, v) in g.edges() {
        let _ = writeln!(s, "{u} {v}");
    }
    Ok(s)
}

fn sporadic_rows(id: Option<usize>, json: bool) -> Out {
    let rows: Vec<&SporadicEntry> = match id {
        Some(id) => vec![sporadic(id).map_err(anyhow::Error::from)?],
        None => sporadic_all().iter().collect(),
    };
    if json {
        return Ok(pretty(&rows));
    }
    let mut s = String::new();
    for e in rows {
        let bip = if e.bipartite { "yes" } else { "no" };
        let _ = writeln!(
            s,
            "{:>2}  {:>2}  {:<3}  {}  {}",
            e.id, e.n, bip, e.canonical_graph6, e.description
        );
    }
    Ok(s)
}

fn certify(input: &Input, json: bool) -> Out {
    let graphs = read_graphs(input)?;
    let certs: Vec<_> = graphs.iter().map(certify_gap).collect();
    if json {
        return Ok(json_lines(
            certs
                .iter()
                .map(|c| serde_json::to_value(c).expect("serializable")),
        ));
    }
    Ok(lines(certs.iter().map(|c| {
        format!(
            "{}  n={}  gap={}  in_gap={}  mult(+1)={}  mult(-1)={}",
            c.graph6,
            c.n,
            if c.verdict { "yes" } else { "no" },
            c.roots_in_gap,
            c.mult_plus1,
            c.mult_minus1
        )
    })))
}

fn charpoly(input: &Input, json: bool) -> Out {
    let graphs = read_graphs(input)?;
    if json {
        return Ok(json_lines(graphs.iter().map(
            |g| json!({"graph6": to_graph6(g), "charpoly": char_poly(g).to_json_coeffs()}),
        )));
    }
    Ok(lines(graphs.iter().map(|g| char_poly(g).to_text())))
}

fn sturm(poly: &str, a: &str, b: &str, multiplicity: bool, json: bool) -> Out {
    let p = IntPoly::parse_coeffs(poly).map_err(|e| anyhow!("--poly: {e}"))?;
    let (a, b) = (parse_rat(a)?, parse_rat(b)?);
    let count = count_roots_open(&p, &a, &b, multiplicity).map_err(|e| anyhow!("{e}"))?;
    if json {
        return Ok(
            json!({"poly": p.to_text(), "a": a.to_string(), "b": b.to_string(), "count": count})
                .to_string()
                + "\n",
        );
    }
    Ok(format!("{count}\n"))
}

fn transform(input: &Input, json: bool, f: impl Fn(&Graph) -> anyhow::Result<Graph>) -> Out {
    let graphs = read_graphs(input)?;
    let outs = graphs.iter().map(&f).collect::<anyhow::Result<Vec<_>>>()?;
    if json {
        return Ok(json_lines(
            outs.iter()
                .map(|h| json!({"graph6": to_graph6(h), "n": h.order()})),
        ));
    }
    Ok(lines(outs.iter().map(to_graph6)))
}

fn covers(input: &Input, json: bool) -> Out {
    let graphs = read_graphs(input)?;
    let mut all = Vec::new();
    for g in &graphs {
        let pre = preimages(g).map_err(anyhow::Error::from)?;
        all.push((to_graph6(g), pre.iter().map(to_graph6).collect::<Vec<_>>()));
    }
    if json {
        return Ok(json_lines(
            all.into_iter()
                .map(|(g, p)| json!({"graph6": g, "preimages": p})),
        ));
    }
    let mut s = String::new();
    for (g, pre) in all {
        let _ = writeln!(s, "# {g}: {} preimage(s)", pre.len());
        for p in pre {
            let _ = writeln!(s, "{p}");
        }
    }
    Ok(s)
}

fn decompose(input: &Input, limit: Option<usize>, labelled: bool, json: bool) -> Out {
    let graphs = read_graphs(input)?;
    let mut s = String::new();
    let mut rows = Vec::new();
    for g in &graphs {
        let ds = triangle_decompositions(g, limit, !labelled);
        let texts: Vec<String> = ds.iter().map(|d| d.to_geometry().to_text()).collect();
        if json {
            rows.push(
                json!({"graph6": to_graph6(g), "count": texts.len(), "decompositions": texts}),
            );
            continue;
        }
        let what = if labelled {
            "labelled"
        } else {
            "up to automorphism"
        };
        let _ = writeln!(
            s,
            "# {}: {} triangle decomposition(s) {what}",
            to_graph6(g),
            texts.len()
        );
        for t in texts {
            s.push_str(&t);
            if !t.ends_with('\n') {
                s.push('\n');
            }
            s.push('\n');
        }
    }
    if json {
        return Ok(json_lines(rows));
    }
    Ok(s)
}

fn classify(max_n: usize, jobs: Option<usize>, json: bool) -> Out {
    if jobs == Some(0) {
        return Err(anyhow!("--jobs must be positive").into());
    }
    let report = classify_gap(max_n, jobs).map_err(anyhow::Error::from)?;
    let out = if json {
        pretty(&report)
    } else {
        report.table()
    };
    match report.unclassified() {
        0 => Ok(out),
        k => Err(Failure::Verification {
            out,
            message: format!("{k} unclassified survivor(s)"),
        }),
    }
}

struct Check {
    name: &'static str,
    k: usize,
    pass: bool,
}

fn verify(k_max: usize, json: bool) -> Out {
    if k_max < 2 {
        return Err(anyhow!("--k-max must be at least 2").into());
    }
    let mut checks = Vec::new();
    let mut push = |name, k, pass: anyhow::Result<bool>| -> anyhow::Result<()> {
        checks.push(Check {
            name,
            k,
            pass: pass?,
        });
        Ok(())
    };
    for k in 2..=k_max.min(8) {
        let doubled = (|| {
            let d = bipartite_double(&families::kollar_sarnak(k)?)?;
            Ok(are_isomorphic(&d, &families::guo_mohar(2 * k)?))
        })();
        push("double(KS(k)) = GM(2k)", k, doubled)?;
        push(
            "sameeigs identity",
            k,
            verify_sameeigs_identity(k).map_err(Into::into),
        )?;
    }
    for k in 2..=k_max.min(16) {
        push(
            "(x^2-1)^k divides phi(GM(k))",
            k,
            gm_spectrum_check(k).map_err(Into::into),
        )?;
    }
    for k in 1..=3 {
        if k >= 2 {
            let even = (|| {
                let pre = preimages(&families::guo_mohar(2 * k)?)?;
                Ok(pre.len() == 1 && are_isomorphic(&pre[0], &families::kollar_sarnak(k)?))
            })();
            push("preimages(GM(2k)) = {KS(k)}", k, even)?;
        }
        let odd = (|| Ok(preimages(&families::guo_mohar(2 * k + 1)?)?.is_empty()))();
        push("preimages(GM(2k+1)) empty", k, odd)?;
    }
    let failed = checks.iter().filter(|c| !c.pass).count();
    let out = if json {
        let v: Vec<Value> = checks
            .iter()
            .map(|c| json!({"check": c.name, "k": c.k, "pass": c.pass}))
            .collect();
        pretty(&v)
    } else {
        let mut s = String::new();
        for c in &checks {
            let _ = writeln!(
                s,
                "{}  {} (k = {})",
                if c.pass { "PASS" } else { "FAIL" },
                c.name,
                c.k
            );
        }
        let _ = writeln!(s, "{} checks, {} failed", checks.len(), failed);
        s
    };
    if failed > 0 {
        bail_verification(out, failed)
    } else {
        Ok(out)
    }
}

fn bail_verification(out: String, failed: usize) -> Out {
    Err(Failure::Verification {
        out,
        message: format!("{failed} identity check(s) failed"),
    })
}
