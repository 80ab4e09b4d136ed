use super::lexer::{tokenize, Tok, Token};
use super::*;
use crate::center::conjugation_action;
use crate::endo::{HopfAutomorphism, HopfDerivation};
use crate::hopf::morphism_make;
use crate::linalg::{add_scaled, zero_vec};
use crate::rational::{parse_q, Q};
use num_traits::Zero;

/// Parses and validates a workspace document.
pub fn parse_workspace(text: &str) -> Result<Workspace> {
    let mut p = Parser {
        toks: tokenize(text)?,
        pos: 0,
        ws: Workspace::new(DEFAULT_DEGREE),
    };
    p.document()?;
    Ok(p.ws)
}

struct Parser {
    toks: Vec<Token>,
    pos: usize,
    ws: Workspace,
}

/// Location of the statement being checked, for semantic errors.
fn sem<T>(line: usize, r: std::result::Result<T, impl std::fmt::Display>) -> Result<T> {
    r.map_err(|e| Error::Semantic {
        line,
        message: e.to_string(),
    })
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.tok)
    }

    fn here(&self) -> (usize, usize) {
        match self.toks.get(self.pos).or_else(|| self.toks.last()) {
            Some(t) => (t.line, t.column),
            None => (1, 1),
        }
    }

    fn line(&self) -> usize {
        self.here().0
    }

    fn error<T>(&self, message: impl Into<String>) -> Result<T> {
        let (line, column) = self.here();
        Err(Error::Syntax {
            line,
            column,
            message: message.into(),
        })
    }

    fn is_sym(&self, s: &str) -> bool {
        matches!(self.peek(), Some(Tok::Sym(x)) if *x == s)
    }

    fn eat_sym(&mut self, s: &str) -> bool {
        if self.is_sym(s) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect_sym(&mut self, s: &str) -> Result<()> {
        if self.eat_sym(s) {
            Ok(())
        } else {
            self.error(format!("expected `{s}`"))
        }
    }

    fn ident(&mut self) -> Result<String> {
        match self.peek() {
            Some(Tok::Ident(s)) => {
                let s = s.clone();
                self.pos += 1;
                Ok(s)
            }
            _ => self.error("expected a name"),
        }
    }

    fn keyword(&mut self, k: &str) -> Result<()> {
        match self.peek() {
            Some(Tok::Ident(s)) if s == k => {
                self.pos += 1;
                Ok(())
            }
            _ => self.error(format!("expected `{k}`")),
        }
    }

    fn skip_newlines(&mut self) {
        while self.peek() == Some(&Tok::Newline) {
            self.pos += 1;
        }
    }

    fn end_of_statement(&mut self) -> Result<()> {
        match self.peek() {
            None => Ok(()),
            Some(Tok::Newline) => {
                self.pos += 1;
                Ok(())
            }
            _ => self.error("expected end of line"),
        }
    }

    fn int(&mut self) -> Result<String> {
        match self.peek() {
            Some(Tok::Int(s)) => {
                let s = s.clone();
                self.pos += 1;
                Ok(s)
            }
            _ => self.error("expected an integer"),
        }
    }

    fn usize(&mut self) -> Result<usize> {
        let s = self.int()?;
        s.parse().or_else(|_| self.error("integer too large"))
    }

    /// `p`, `-p`, `p/q`.
    fn rational(&mut self) -> Result<Q> {
        let neg = self.eat_sym("-");
        let n = self.int()?;
        let text = if self.eat_sym("/") { format!("{n}/{}", self.int()?) } else { n };
        let x = match parse_q(&text) {
            Some(x) => x,
            None => return self.error("zero denominator"),
        };
        Ok(if neg { -x } else { x })
    }

    /// `[[a, b], [c, d]]`, or `[]` for the zero matrix of the expected shape.
    fn matrix(&mut self, rows: usize, cols: usize) -> Result<Matrix> {
        let line = self.line();
        self.expect_sym("[")?;
        self.skip_newlines();
        let mut data: Vec<Vector> = Vec::new();
        while !self.eat_sym("]") {
            self.expect_sym("[")?;
            let mut row = Vec::new();
            while !self.eat_sym("]") {
                row.push(self.rational()?);
                if !self.is_sym("]") {
                    self.expect_sym(",")?;
                }
            }
            data.push(row);
            self.skip_newlines();
            if !self.is_sym("]") {
                self.expect_sym(",")?;
                self.skip_newlines();
            }
        }
        if data.is_empty() {
            return Ok(Matrix::zeros(rows, cols));
        }
        if data.len() != rows || data.iter().any(|r| r.len() != cols) {
            return sem(line, Err(format!("expected a {rows}×{cols} matrix")));
        }
        Ok(Matrix::from_rows(data))
    }

    /// Cycle notation such as `(1 2 3)(4 5)` or `()`, returned as text.
    fn cycles(&mut self) -> Result<String> {
        if !self.is_sym("(") {
            return self.error("expected a permutation in cycle notation");
        }
        let mut text = String::new();
        while self.eat_sym("(") {
            let mut points = Vec::new();
            while !self.eat_sym(")") {
                points.push(self.int()?);
                self.eat_sym(",");
            }
            text.push_str(&format!("({})", points.join(" ")));
        }
        Ok(text)
    }

    fn element(&mut self, group: &GroupTable, degree: usize) -> Result<usize> {
        let line = self.line();
        let text = self.cycles()?;
        let perm = sem(line, Perm::parse_cycles(degree, &text))?;
        let name = perm.to_string();
        group
            .label(&name)
            .ok_or(())
            .or_else(|_| sem(line, Err(format!("`{text}` is not an element of the group"))))
    }

    /// `2 x - 1/2*y + z`, or `0`.
    fn expr(&mut self, names: &[String]) -> Result<Vector> {
        let line = self.line();
        let mut v = zero_vec(names.len());
        let mut first = true;
        loop {
            let neg = if first {
                self.eat_sym("-")
            } else if self.eat_sym("+") {
                false
            } else if self.eat_sym("-") {
                true
            } else {
                break;
            };
            first = false;
            let coeff = if matches!(self.peek(), Some(Tok::Int(_))) {
                let c = self.rational()?;
                self.eat_sym("*");
                Some(c)
            } else {
                None
            };
            let c = coeff.clone().unwrap_or_else(crate::rational::one);
            let c = if neg { -c } else { c };
            match self.peek() {
                Some(Tok::Ident(_)) => {
                    let n = self.ident()?;
                    let i = match names.iter().position(|x| *x == n) {
                        Some(i) => i,
                        None => return sem(line, Err(format!("unknown basis element `{n}`"))),
                    };
                    v[i] += c;
                }
                _ if coeff.as_ref().is_some_and(|c| c.is_zero()) => {}
                _ => return self.error("expected a basis element"),
            }
        }
        if first {
            return self.error("expected an expression");
        }
        Ok(v)
    }

    /// Items of a `{ … }` block separated by `;` or line breaks.
    fn block(&mut self, mut item: impl FnMut(&mut Self) -> Result<()>) -> Result<()> {
        self.expect_sym("{")?;
        loop {
            while self.eat_sym(";") || self.peek() == Some(&Tok::Newline) {
                self.skip_newlines();
            }
            if self.eat_sym("}") {
                return Ok(());
            }
            if self.peek().is_none() {
                return self.error("unterminated block");
            }
            item(self)?;
            if !(self.is_sym(";") || self.is_sym("}") || self.peek() == Some(&Tok::Newline)) {
                return self.error("expected `;`, line break or `}`");
            }
        }
    }

    fn document(&mut self) -> Result<()> {
        loop {
            self.skip_newlines();
            if self.peek().is_none() {
                return Ok(());
            }
            let line = self.line();
            let kw = self.ident()?;
            let (name, obj) = match kw.as_str() {
                "degree" => {
                    self.ws.degree = self.usize()? as u32;
                    self.end_of_statement()?;
                    continue;
                }
                "group" => self.group()?,
                "lie" => self.lie()?,
                "rep" => self.rep()?,
                "hopf" => self.hopf()?,
                "sub" => self.sub()?,
                "action" => self.action()?,
                "morphism" => self.morphism()?,
                other => {
                    self.pos -= 1;
                    return self.error(format!("unknown statement `{other}`"));
                }
            };
            self.end_of_statement()?;
            sem(line, self.ws.insert(name, obj))?;
        }
    }

    fn lookup<'a, T>(&'a self, line: usize, name: &str, get: impl Fn(&'a Workspace, &str) -> Result<T>, kind: &str) -> Result<T> {
        get(&self.ws, name).or_else(|_| sem(line, Err(format!("unknown {kind} `{name}`"))))
    }

    fn group(&mut self) -> Result<(String, Object)> {
        let name = self.ident()?;
        self.expect_sym("=")?;
        self.keyword("perm")?;
        self.expect_sym("(")?;
        let degree = self.usize()?;
        self.expect_sym(")")?;
        self.expect_sym("[")?;
        let line = self.line();
        let mut generators = Vec::new();
        while !self.eat_sym("]") {
            let text = self.cycles()?;
            generators.push(sem(line, Perm::parse_cycles(degree, &text))?);
            if !self.is_sym("]") {
                self.expect_sym(",")?;
            }
        }
        let table = sem(line, GroupTable::from_permutations(degree, &generators))?;
        Ok((name, Object::Group(GroupDecl { degree, generators, table })))
    }

    fn lie(&mut self) -> Result<(String, Object)> {
        let name = self.ident()?;
        let start = self.line();
        let mut names: Option<Vec<String>> = None;
        let mut brackets: Vec<(usize, usize, usize, Vector)> = Vec::new();
        self.block(|p| {
            let line = p.line();
            match p.ident()?.as_str() {
                "basis" => {
                    let mut ns = Vec::new();
                    while let Some(Tok::Ident(_)) = p.peek() {
                        ns.push(p.ident()?);
                        p.eat_sym(",");
                    }
                    names = Some(ns);
                }
                "bracket" => {
                    let ns = match &names {
                        Some(ns) => ns.clone(),
                        None => return sem(line, Err("`basis` must come before `bracket`")),
                    };
                    p.expect_sym("[")?;
                    let a = p.ident()?;
                    p.expect_sym(",")?;
                    let b = p.ident()?;
                    p.expect_sym("]")?;
                    p.expect_sym("=")?;
                    let v = p.expr(&ns)?;
                    let idx = |n: &str| ns.iter().position(|x| x == n);
                    match (idx(&a), idx(&b)) {
                        (Some(i), Some(j)) => brackets.push((line, i, j, v)),
                        _ => return sem(line, Err(format!("unknown basis element in `[{a}, {b}]`"))),
                    }
                }
                other => {
                    p.pos -= 1;
                    return p.error(format!("expected `basis` or `bracket`, found `{other}`"));
                }
            }
            Ok(())
        })?;
        let names = names.unwrap_or_default();
        let n = names.len();
        let mut table: Vec<Vec<Option<Vector>>> = vec![vec![None; n]; n];
        for (line, i, j, v) in brackets {
            let neg: Vector = v.iter().map(|c| -c.clone()).collect();
            for (a, b, w) in [(i, j, v), (j, i, neg)] {
                if table[a][b].as_ref().is_some_and(|old| *old != w) {
                    return sem(line, Err(format!("conflicting brackets for [{}, {}]", names[a], names[b])));
                }
                table[a][b] = Some(w);
            }
        }
        let table = table
            .into_iter()
            .map(|row| row.into_iter().map(|v| v.unwrap_or_else(|| zero_vec(n))).collect())
            .collect();
        let lie = sem(start, LieAlgebra::new(names, table))?;
        Ok((name, Object::Lie(lie)))
    }

    fn rep(&mut self) -> Result<(String, Object)> {
        let name = self.ident()?;
        let line = self.line();
        self.expect_sym(":")?;
        let group = self.ident()?;
        self.expect_sym("->")?;
        let lie = self.ident()?;
        let g = self.lookup(line, &group, Workspace::group_decl, "group")?.clone();
        let n = self.lookup(line, &lie, Workspace::lie, "Lie algebra")?.dim();
        let mut images = Vec::new();
        self.block(|p| {
            let x = p.element(&g.table, g.degree)?;
            p.expect_sym("=>")?;
            images.push((x, p.matrix(n, n)?));
            Ok(())
        })?;
        let (gens, mats): (Vec<usize>, Vec<Matrix>) = images.iter().cloned().unzip();
        let rep = sem(line, LinearRep::from_generators(&g.table, n, &gens, &mats))?;
        Ok((name, Object::Rep(RepDecl { group, lie, images, rep })))
    }

    fn hopf(&mut self) -> Result<(String, Object)> {
        let name = self.ident()?;
        let line = self.line();
        self.expect_sym("=")?;
        let kind = self.ident()?;
        let decl = match kind.as_str() {
            "K" => {
                self.expect_sym("[")?;
                let group = self.ident()?;
                self.expect_sym("]")?;
                let g = self.lookup(line, &group, Workspace::group_decl, "group")?;
                HopfDecl {
                    perm_degree: g.degree,
                    hopf: CgkmmHopf::group_algebra(g.table.clone()),
                    source: HopfSource::GroupAlgebra(group),
                }
            }
            "U" => {
                self.expect_sym("(")?;
                let lie = self.ident()?;
                self.expect_sym(")")?;
                let l = self.lookup(line, &lie, Workspace::lie, "Lie algebra")?;
                HopfDecl {
                    perm_degree: 1,
                    hopf: CgkmmHopf::enveloping(l.clone()),
                    source: HopfSource::Enveloping(lie),
                }
            }
            "cgkmm" => {
                self.expect_sym("(")?;
                let lie = self.ident()?;
                self.expect_sym(",")?;
                let group = self.ident()?;
                self.expect_sym(",")?;
                let rep = self.ident()?;
                self.expect_sym(")")?;
                let l = self.lookup(line, &lie, Workspace::lie, "Lie algebra")?;
                let g = self.lookup(line, &group, Workspace::group_decl, "group")?;
                let r = self.lookup(line, &rep, Workspace::rep_decl, "representation")?;
                if r.group != group || r.lie != lie {
                    return sem(line, Err(format!("`{rep}` is a representation of {} on {}", r.group, r.lie)));
                }
                HopfDecl {
                    perm_degree: g.degree,
                    hopf: sem(line, CgkmmHopf::new(g.table.clone(), l.clone(), r.rep.clone()))?,
                    source: HopfSource::Cgkmm { lie, group, rep },
                }
            }
            other => {
                self.pos -= 1;
                return self.error(format!("expected `K[…]`, `U(…)` or `cgkmm(…)`, found `{other}`"));
            }
        };
        Ok((name, Object::Hopf(decl)))
    }

    fn sub(&mut self) -> Result<(String, Object)> {
        let name = self.ident()?;
        let line = self.line();
        self.keyword("of")?;
        let hopf = self.ident()?;
        let h = self.lookup(line, &hopf, Workspace::hopf_decl, "Hopf algebra")?.clone();
        let names: Vec<String> = h.hopf.lie().names().to_vec();
        let mut group_gens = Vec::new();
        let mut lie_gens = Vec::new();
        self.block(|p| {
            match p.ident()?.as_str() {
                "group" => {
                    while p.is_sym("(") {
                        group_gens.push(p.element(h.hopf.group(), h.perm_degree)?);
                        p.eat_sym(",");
                    }
                }
                "lie" => {
                    while matches!(p.peek(), Some(Tok::Ident(_)) | Some(Tok::Int(_))) || p.is_sym("-") {
                        lie_gens.push(p.expr(&names)?);
                        p.eat_sym(",");
                    }
                }
                other => {
                    p.pos -= 1;
                    return p.error(format!("expected `group` or `lie`, found `{other}`"));
                }
            }
            Ok(())
        })?;
        let sub = sem(line, HopfSubalgebra::generated(&h.hopf, &group_gens, lie_gens.clone()))?;
        Ok((name, Object::Sub(SubDecl { hopf, group_gens, lie_gens, sub })))
    }

    fn action(&mut self) -> Result<(String, Object)> {
        let name = self.ident()?;
        let line = self.line();
        if self.eat_sym("=") {
            let kind = self.ident()?;
            self.expect_sym("(")?;
            let first = self.ident()?;
            self.expect_sym(",")?;
            let second = self.ident()?;
            self.expect_sym(")")?;
            let decl = match kind.as_str() {
                "conj" => {
                    let a = self.lookup(line, &first, Workspace::hopf, "Hopf algebra")?;
                    let h = self.lookup(line, &second, Workspace::sub, "subalgebra")?;
                    if h.ambient() != a {
                        return sem(line, Err(format!("`{second}` is not a subalgebra of `{first}`")));
                    }
                    ActionDecl {
                        action: sem(line, conjugation_action(a, h))?.0,
                        source: ActionSource::Conj { hopf: first, sub: second },
                    }
                }
                "trivial" => {
                    let b = self.lookup(line, &first, Workspace::hopf, "Hopf algebra")?;
                    let a = self.lookup(line, &second, Workspace::hopf, "Hopf algebra")?;
                    ActionDecl {
                        action: HopfAction::trivial(b, a),
                        source: ActionSource::Trivial { actor: first, target: second },
                    }
                }
                other => return sem(line, Err(format!("unknown action constructor `{other}`"))),
            };
            return Ok((name, Object::Action(decl)));
        }
        self.expect_sym(":")?;
        let actor = self.ident()?;
        self.keyword("on")?;
        let target = self.ident()?;
        let b = self.lookup(line, &actor, Workspace::hopf_decl, "Hopf algebra")?.clone();
        let a = self.lookup(line, &target, Workspace::hopf_decl, "Hopf algebra")?.clone();
        let n = a.hopf.lie_dim();
        let a_names = a.hopf.lie().names().to_vec();
        let mut items = Vec::new();
        self.block(|p| {
            let item_line = p.line();
            let key = if p.is_sym("(") {
                Err(p.element(b.hopf.group(), b.perm_degree)?)
            } else {
                let y = p.ident()?;
                match b.hopf.lie().index(&y) {
                    Some(i) => Ok(i),
                    None => return sem(item_line, Err(format!("unknown basis element `{y}`"))),
                }
            };
            p.expect_sym("=>")?;
            let kind = p.ident()?;
            p.expect_sym("(")?;
            let m = p.matrix(n, n)?;
            p.expect_sym(",")?;
            p.expect_sym("[")?;
            let mut pairs_g = Vec::new();
            let mut pairs_v = Vec::new();
            while !p.eat_sym("]") {
                let x = p.element(a.hopf.group(), a.perm_degree)?;
                p.expect_sym("->")?;
                match kind.as_str() {
                    "aut" => pairs_g.push((x, p.element(a.hopf.group(), a.perm_degree)?)),
                    "der" => pairs_v.push((x, p.expr(&a_names)?)),
                    _ => {}
                }
                if !p.is_sym("]") {
                    p.expect_sym(",")?;
                }
            }
            p.expect_sym(")")?;
            match (kind.as_str(), key) {
                ("aut", Err(element)) => items.push(ActionItem::Group {
                    element,
                    alpha: m,
                    beta: pairs_g,
                }),
                ("der", Ok(basis)) => items.push(ActionItem::Lie {
                    basis,
                    delta: m,
                    cocycle: pairs_v,
                }),
                _ => return sem(item_line, Err("group elements act by `aut(…)`, Lie basis elements by `der(…)`")),
            }
            Ok(())
        })?;
        let action = sem(line, build_action(&b.hopf, &a.hopf, &items))?;
        Ok((
            name,
            Object::Action(ActionDecl {
                source: ActionSource::Explicit { actor, target, items },
                action,
            }),
        ))
    }

    fn morphism(&mut self) -> Result<(String, Object)> {
        let name = self.ident()?;
        let line = self.line();
        self.expect_sym(":")?;
        let source = self.ident()?;
        self.expect_sym("->")?;
        let target = self.ident()?;
        let s = self.lookup(line, &source, Workspace::hopf_decl, "Hopf algebra")?.clone();
        let t = self.lookup(line, &target, Workspace::hopf_decl, "Hopf algebra")?.clone();
        let mut alpha = Matrix::zeros(t.hopf.lie_dim(), s.hopf.lie_dim());
        let mut group = Vec::new();
        self.block(|p| {
            match p.ident()?.as_str() {
                "lie" => alpha = p.matrix(t.hopf.lie_dim(), s.hopf.lie_dim())?,
                "group" => {
                    p.expect_sym("[")?;
                    while !p.eat_sym("]") {
                        let x = p.element(s.hopf.group(), s.perm_degree)?;
                        p.expect_sym("->")?;
                        group.push((x, p.element(t.hopf.group(), t.perm_degree)?));
                        if !p.is_sym("]") {
                            p.expect_sym(",")?;
                        }
                    }
                }
                other => {
                    p.pos -= 1;
                    return p.error(format!("expected `lie` or `group`, found `{other}`"));
                }
            }
            Ok(())
        })?;
        let beta = sem(line, extend_group_map(s.hopf.group(), t.hopf.group(), &group, false))?;
        let morphism = sem(line, morphism_make(&s.hopf, &t.hopf, alpha.clone(), beta))?;
        Ok((
            name,
            Object::Morphism(MorphismDecl {
                source,
                target,
                alpha,
                group,
                morphism,
            }),
        ))
    }
}

/// Extends listed images to a homomorphism; unlisted generators go to the identity, or to themselves when `fix`.
fn extend_group_map(src: &GroupTable, tgt: &GroupTable, pairs: &[(usize, usize)], fix: bool) -> std::result::Result<Vec<usize>, String> {
    let mut gens: Vec<usize> = pairs.iter().map(|p| p.0).collect();
    let mut images: Vec<usize> = pairs.iter().map(|p| p.1).collect();
    for &g in src.generators() {
        if !gens.contains(&g) {
            gens.push(g);
            images.push(if fix { g } else { 0 });
        }
    }
    src.extend_hom(&gens, &images, tgt)
        .ok_or_else(|| "the listed images do not define a homomorphism".to_string())
}

pub(super) fn build_action(b: &CgkmmHopf, a: &CgkmmHopf, items: &[ActionItem]) -> Result<HopfAction> {
    let mut gens = Vec::new();
    let mut auts = Vec::new();
    let mut ders = vec![HopfDerivation::zero(a); b.lie_dim()];
    for item in items {
        match item {
            ActionItem::Group { element, alpha, beta } => {
                let map = extend_group_map(a.group(), a.group(), beta, true).map_err(|m| Error::InvalidAction {
                    invariant: "automorphism".into(),
                    witness: m,
                })?;
                gens.push(*element);
                auts.push(HopfAutomorphism::new(a, alpha.clone(), map)?);
            }
            ActionItem::Lie { basis, delta, cocycle } => {
                ders[*basis] = HopfDerivation::new(a, delta.clone(), extend_cocycle(a, cocycle)?)?;
            }
        }
    }
    for &g in b.group().generators() {
        if !gens.contains(&g) {
            gens.push(g);
            auts.push(HopfAutomorphism::identity(a));
        }
    }
    HopfAction::from_generators(b, a, &gens, auts, ders)
}

/// Extends values on generators by `d(gh) = d(g) + τ(g) d(h)`; unlisted generators get `0`.
fn extend_cocycle(a: &CgkmmHopf, pairs: &[(usize, Vector)]) -> Result<Vec<Vector>> {
    let n = a.lie_dim();
    let g = a.group();
    let mut gens: Vec<usize> = pairs.iter().map(|p| p.0).collect();
    let mut vals: Vec<(usize, Vector)> = pairs.iter().map(|(x, v)| (*x, v.clone())).collect();
    for &s in g.generators() {
        if !gens.contains(&s) {
            gens.push(s);
            vals.push((s, zero_vec(n)));
        }
    }
    let ext = g.extend_from_generators(&gens, &vals, (0, zero_vec(n)), |(x, d), (y, e)| {
        let mut v = d.clone();
        add_scaled(&mut v, &crate::rational::one(), &a.tau().act(*x, e));
        (g.mul(*x, *y), v)
    });
    ext.into_iter()
        .map(|x| x.map(|(_, v)| v))
        .collect::<Option<Vec<_>>>()
        .ok_or_else(|| Error::InvalidAction {
            invariant: "cocycle".into(),
            witness: "listed elements do not generate the group".into(),
        })
}
