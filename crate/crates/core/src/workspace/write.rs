use super::*;
use crate::lie::render_vector;
use crate::rational::fmt_q;
use std::fmt::Write;

fn matrix(m: &Matrix) -> String {
    if m.rows() == 0 || m.cols() == 0 || m.is_zero() {
        return "[]".into();
    }
    let rows: Vec<String> = m
        .to_rows()
        .iter()
        .map(|r| format!("[{}]", r.iter().map(fmt_q).collect::<Vec<_>>().join(", ")))
        .collect();
    format!("[{}]", rows.join(", "))
}

fn expr(names: &[String], v: &[crate::rational::Q]) -> String {
    let s = render_vector(names, v);
    if s.is_empty() {
        "0".into()
    } else {
        s
    }
}

pub(super) fn write_workspace(ws: &Workspace) -> String {
    let mut out = String::new();
    writeln!(out, "degree {}", ws.degree).unwrap();
    let hopf = |name: &str| ws.hopf(name).expect("resolved on load");
    for (name, obj) in ws.entries() {
        match obj {
            Object::Group(g) => {
                let gens: Vec<String> = g.generators.iter().map(|p| p.to_string()).collect();
                writeln!(out, "group {name} = perm({})[{}]", g.degree, gens.join(", ")).unwrap();
            }
            Object::Lie(l) => {
                let mut items = vec![format!("basis {}", l.names().join(" "))];
                for i in 0..l.dim() {
                    for j in i + 1..l.dim() {
                        let v = l.bracket_basis(i, j);
                        if v.iter().any(|c| !num_traits::Zero::is_zero(c)) {
                            items.push(format!("bracket [{}, {}] = {}", l.name(i), l.name(j), expr(l.names(), v)));
                        }
                    }
                }
                writeln!(out, "lie {name} {{ {} }}", items.join("; ")).unwrap();
            }
            Object::Rep(r) => {
                let g = ws.group_decl(&r.group).expect("resolved on load");
                let items: Vec<String> = r
                    .images
                    .iter()
                    .map(|(x, m)| format!("{} => {}", g.table.name(*x), matrix(m)))
                    .collect();
                writeln!(out, "rep {name} : {} -> {} {{ {} }}", r.group, r.lie, items.join("; ")).unwrap();
            }
            Object::Hopf(h) => {
                let rhs = match &h.source {
                    HopfSource::GroupAlgebra(g) => format!("K[{g}]"),
                    HopfSource::Enveloping(l) => format!("U({l})"),
                    HopfSource::Cgkmm { lie, group, rep } => format!("cgkmm({lie}, {group}, {rep})"),
                };
                writeln!(out, "hopf {name} = {rhs}").unwrap();
            }
            Object::Sub(s) => {
                let a = hopf(&s.hopf);
                let group: Vec<&str> = s.group_gens.iter().map(|&x| a.group().name(x)).collect();
                let lie: Vec<String> = s.lie_gens.iter().map(|v| expr(a.lie().names(), v)).collect();
                writeln!(out, "sub {name} of {} {{ group {}; lie {} }}", s.hopf, group.join(", "), lie.join(", ")).unwrap();
            }
            Object::Action(a) => match &a.source {
                ActionSource::Conj { hopf, sub } => writeln!(out, "action {name} = conj({hopf}, {sub})").unwrap(),
                ActionSource::Trivial { actor, target } => writeln!(out, "action {name} = trivial({actor}, {target})").unwrap(),
                ActionSource::Explicit { actor, target, items } => {
                    let (b, t) = (hopf(actor), hopf(target));
                    let gname = |x: usize| t.group().name(x).to_string();
                    let items: Vec<String> = items
                        .iter()
                        .map(|item| match item {
                            ActionItem::Group { element, alpha, beta } => {
                                let pairs: Vec<String> = beta.iter().map(|(x, y)| format!("{} -> {}", gname(*x), gname(*y))).collect();
                                format!("{} => aut({}, [{}])", b.group().name(*element), matrix(alpha), pairs.join(", "))
                            }
                            ActionItem::Lie { basis, delta, cocycle } => {
                                let pairs: Vec<String> = cocycle
                                    .iter()
                                    .map(|(x, v)| format!("{} -> {}", gname(*x), expr(t.lie().names(), v)))
                                    .collect();
                                format!("{} => der({}, [{}])", b.lie().name(*basis), matrix(delta), pairs.join(", "))
                            }
                        })
                        .collect();
                    writeln!(out, "action {name} : {actor} on {target} {{ {} }}", items.join("; ")).unwrap();
                }
            },
            Object::Morphism(m) => {
                let (s, t) = (hopf(&m.source), hopf(&m.target));
                let pairs: Vec<String> = m
                    .group
                    .iter()
                    .map(|(x, y)| format!("{} -> {}", s.group().name(*x), t.group().name(*y)))
                    .collect();
                writeln!(
                    out,
                    "morphism {name} : {} -> {} {{ lie {}; group [{}] }}",
                    m.source,
                    m.target,
                    matrix(&m.alpha),
                    pairs.join(", ")
                )
                .unwrap();
            }
        }
    }
    out
}
