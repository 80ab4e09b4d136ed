//! A line-oriented definition language for groups, Lie algebras, representations, Hopf algebras,
//! subalgebras, actions and morphisms.
//!
//! ```text
//! degree 3
//! group S3 = perm(3)[(1 2 3), (1 2)]
//! lie h3 { basis x y z; bracket [x, y] = z }
//! rep sgn : C2 -> line { (1 2) => [[-1]] }
//! hopf KS3 = K[S3]
//! hopf Uh3 = U(h3)
//! hopf Sign = cgkmm(line, C2, sgn)
//! sub A3 of KS3 { group (1 2 3) }
//! action inv : KC2 on KC3 { (1 2) => aut([], [(1 2 3) -> (1 3 2)]) }
//! action ad = conj(KS3, A3)
//! morphism p : KC4 -> KC2 { group [(1 2 3 4) -> (1 2)] }
//! ```

mod lexer;
mod parse;
mod write;

use crate::action::HopfAction;
use crate::error::{Error, Result};
use crate::group::{GroupTable, LinearRep, Perm};
use crate::hopf::{CgkmmHopf, HopfMorphism, HopfSubalgebra};
use crate::lie::LieAlgebra;
use crate::linalg::{Matrix, Vector};

pub use parse::parse_workspace;

pub const DEFAULT_DEGREE: u32 = 3;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupDecl {
    pub degree: usize,
    pub generators: Vec<Perm>,
    pub table: GroupTable,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepDecl {
    pub group: String,
    pub lie: String,
    /// Generator labels with their matrices, as written.
    pub images: Vec<(usize, Matrix)>,
    pub rep: LinearRep,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HopfSource {
    GroupAlgebra(String),
    Enveloping(String),
    Cgkmm { lie: String, group: String, rep: String },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HopfDecl {
    pub source: HopfSource,
    /// Degree of the permutations naming the group elements.
    pub perm_degree: usize,
    pub hopf: CgkmmHopf,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubDecl {
    pub hopf: String,
    pub group_gens: Vec<usize>,
    pub lie_gens: Vec<Vector>,
    pub sub: HopfSubalgebra,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ActionItem {
    /// An actor group element, the Lie part of its automorphism, and group images in the target.
    Group { element: usize, alpha: Matrix, beta: Vec<(usize, usize)> },
    /// An actor Lie basis index, `δ`, and cocycle values on target group elements.
    Lie { basis: usize, delta: Matrix, cocycle: Vec<(usize, Vector)> },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ActionSource {
    Explicit { actor: String, target: String, items: Vec<ActionItem> },
    Conj { hopf: String, sub: String },
    Trivial { actor: String, target: String },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ActionDecl {
    pub source: ActionSource,
    pub action: HopfAction,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MorphismDecl {
    pub source: String,
    pub target: String,
    pub alpha: Matrix,
    pub group: Vec<(usize, usize)>,
    pub morphism: HopfMorphism,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Object {
    Group(GroupDecl),
    Lie(LieAlgebra),
    Rep(RepDecl),
    Hopf(HopfDecl),
    Sub(SubDecl),
    Action(ActionDecl),
    Morphism(MorphismDecl),
}

impl Object {
    pub fn kind(&self) -> &'static str {
        match self {
            Object::Group(_) => "group",
            Object::Lie(_) => "lie",
            Object::Rep(_) => "rep",
            Object::Hopf(_) => "hopf",
            Object::Sub(_) => "sub",
            Object::Action(_) => "action",
            Object::Morphism(_) => "morphism",
        }
    }
}

/// Validated declarations in input order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Workspace {
    pub degree: u32,
    entries: Vec<(String, Object)>,
}

macro_rules! getter {
    ($name:ident, $variant:ident, $ty:ty) => {
        pub fn $name(&self, name: &str) -> Result<&$ty> {
            match self.get(name) {
                Some(Object::$variant(x)) => Ok(x),
                _ => Err(Error::UnknownObject(name.into())),
            }
        }
    };
}

impl Workspace {
    pub fn new(degree: u32) -> Self {
        Workspace {
            degree,
            entries: Vec::new(),
        }
    }

    pub fn entries(&self) -> &[(String, Object)] {
        &self.entries
    }

    pub fn get(&self, name: &str) -> Option<&Object> {
        self.entries.iter().find(|(n, _)| n == name).map(|(_, o)| o)
    }

    pub(crate) fn insert(&mut self, name: String, obj: Object) -> std::result::Result<(), String> {
        if self.get(&name).is_some() {
            return Err(format!("duplicate name `{name}`"));
        }
        self.entries.push((name, obj));
        Ok(())
    }

    getter!(group_decl, Group, GroupDecl);
    getter!(lie, Lie, LieAlgebra);
    getter!(rep_decl, Rep, RepDecl);
    getter!(hopf_decl, Hopf, HopfDecl);
    getter!(sub_decl, Sub, SubDecl);
    getter!(action_decl, Action, ActionDecl);
    getter!(morphism_decl, Morphism, MorphismDecl);

    pub fn hopf(&self, name: &str) -> Result<&CgkmmHopf> {
        self.hopf_decl(name).map(|h| &h.hopf)
    }

    pub fn sub(&self, name: &str) -> Result<&HopfSubalgebra> {
        self.sub_decl(name).map(|s| &s.sub)
    }

    pub fn action(&self, name: &str) -> Result<&HopfAction> {
        self.action_decl(name).map(|a| &a.action)
    }

    pub fn morphism(&self, name: &str) -> Result<&HopfMorphism> {
        self.morphism_decl(name).map(|m| &m.morphism)
    }

    /// Canonical text; parsing it gives back an equal workspace.
    pub fn to_text(&self) -> String {
        write::write_workspace(self)
    }
}

#[cfg(test)]
mod tests;
