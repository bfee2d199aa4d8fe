//! Finite group construction and enumeration.
//!
//! Groups are built from a [`GroupSpec`] by breadth-first closure over a
//! fixed generator sequence, producing a fully deterministic indexed element
//! table with the identity at index 0. No stabilizer chains, no Cayley
//! tables: multiplication is recomputed on demand and resolved back to an
//! index through a hash map.
//!
//! Supported constructions: cyclic and abelian word groups, symmetric and
//! alternating permutation groups, generalized dihedral and generalized
//! quaternion presentations, (projective) special linear matrix groups,
//! cyclic-by-cyclic semidirect products, binary direct products, and
//! permutation groups loaded from generator files (checked against a table
//! of known orders).

pub mod matrix;
mod perm;
mod spec;

pub use spec::GroupSpec;

use crate::ff::FieldSpec;
use crate::numtheory::{self, powmod};
use crate::{Error, Result};
use std::collections::HashMap;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

/// Default enumeration cap (number of elements).
pub const DEFAULT_CAP: usize = 2_000_000;

/// A group element value. Equality and hashing are structural; `Ord` gives
/// the fixed total order used for matrix-coset canonicalization.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Element {
    /// Image vector on points `0..n`.
    Perm(Box<[u8]>),
    /// Row-major k×k matrix of field codes (canonical coset representative
    /// for projective constructions).
    Mat(Box<[u32]>),
    /// Exponent vector in a structured presentation.
    Word(Box<[u32]>),
    /// Indices into the two component groups of a product.
    Pair(u32, u32),
}

/// Word presentations with normal-form exponent vectors.
#[derive(Debug, Clone)]
enum Presentation {
    /// Direct product of cyclic groups; word = one exponent per factor.
    Abelian { moduli: Vec<u64> },
    /// `C_pm ⋊ C_qn`, generator of the right factor acting as `a ↦ a^act`;
    /// word = `[i, j]` for `a^i u^j`.
    Semidirect { pm: u64, qn: u64, act: u64 },
    /// Generalized dihedral over an abelian group; word = abelian exponents
    /// plus a final flip bit.
    Dihedral { moduli: Vec<u64> },
    /// Generalized quaternion of order `2·half`; word `[i, j]` = `x^i y^j`
    /// with `x` of order `half` and `j < 2`.
    Quaternion { half: u64 },
}

impl Presentation {
    fn identity(&self) -> Element {
        let len = match self {
            Presentation::Abelian { moduli } => moduli.len(),
            Presentation::Semidirect { .. } => 2,
            Presentation::Dihedral { moduli } => moduli.len() + 1,
            Presentation::Quaternion { .. } => 2,
        };
        Element::Word(vec![0u32; len].into_boxed_slice())
    }

    fn mul(&self, a: &[u32], b: &[u32]) -> Box<[u32]> {
        match self {
            Presentation::Abelian { moduli } => moduli
                .iter()
                .zip(a.iter().zip(b))
                .map(|(&m, (&x, &y))| ((x as u64 + y as u64) % m) as u32)
                .collect(),
            Presentation::Semidirect { pm, qn, act } => {
                let (i, j) = (a[0] as u64, a[1] as u64);
                let (i2, j2) = (b[0] as u64, b[1] as u64);
                // a^i u^j · a^i2 u^j2 = a^(i + i2·act^j) u^(j + j2)
                let shift = powmod(*act, j, *pm);
                let ii = (i + i2 % pm * shift % pm) % pm;
                let jj = (j + j2) % qn;
                vec![ii as u32, jj as u32].into_boxed_slice()
            }
            Presentation::Dihedral { moduli } => {
                let flip = a[moduli.len()];
                let mut out = Vec::with_capacity(moduli.len() + 1);
                for (idx, &m) in moduli.iter().enumerate() {
                    let x = a[idx] as u64;
                    let y = b[idx] as u64;
                    let v = if flip == 0 { (x + y) % m } else { (x + m - y % m) % m };
                    out.push(v as u32);
                }
                out.push(flip ^ b[moduli.len()]);
                out.into_boxed_slice()
            }
            Presentation::Quaternion { half } => {
                let n = half / 2;
                let (i, j) = (a[0] as u64, a[1]);
                let (i2, j2) = (b[0] as u64, b[1]);
                // y x y^{-1} = x^{-1}; y^2 = x^n.
                let (mut ii, mut jj) = if j == 0 {
                    ((i + i2) % half, j2)
                } else {
                    ((i + half - i2 % half) % half, 1 ^ j2)
                };
                if j == 1 && j2 == 1 {
                    // y·y = x^n landed in jj = 0; add the x^n.
                    ii = (ii + n) % half;
                    jj = 0;
                }
                vec![ii as u32, jj].into_boxed_slice()
            }
        }
    }

    fn inv(&self, a: &[u32]) -> Box<[u32]> {
        match self {
            Presentation::Abelian { moduli } => moduli
                .iter()
                .zip(a)
                .map(|(&m, &x)| ((m - x as u64 % m) % m) as u32)
                .collect(),
            Presentation::Semidirect { pm, qn, act } => {
                let (i, j) = (a[0] as u64, a[1] as u64);
                let jj = (qn - j) % qn;
                let shift = powmod(*act, jj, *pm);
                let ii = (pm - i) % pm * shift % pm;
                vec![ii as u32, jj as u32].into_boxed_slice()
            }
            Presentation::Dihedral { moduli } => {
                let flip = a[moduli.len()];
                if flip == 1 {
                    a.to_vec().into_boxed_slice() // reflections are involutions
                } else {
                    let mut out: Vec<u32> = moduli
                        .iter()
                        .zip(a)
                        .map(|(&m, &x)| ((m - x as u64 % m) % m) as u32)
                        .collect();
                    out.push(0);
                    out.into_boxed_slice()
                }
            }
            Presentation::Quaternion { half } => {
                let n = half / 2;
                let (i, j) = (a[0] as u64, a[1]);
                if j == 0 {
                    vec![((half - i) % half) as u32, 0].into_boxed_slice()
                } else {
                    vec![((i + n) % half) as u32, 1].into_boxed_slice()
                }
            }
        }
    }

    fn order(&self, a: &[u32]) -> u64 {
        match self {
            Presentation::Abelian { moduli } => moduli
                .iter()
                .zip(a)
                .map(|(&m, &x)| m / numtheory::gcd(m, x as u64))
                .fold(1, numtheory::lcm),
            Presentation::Dihedral { moduli } => {
                if a[moduli.len()] == 1 {
                    2
                } else {
                    moduli
                        .iter()
                        .zip(a)
                        .map(|(&m, &x)| m / numtheory::gcd(m, x as u64))
                        .fold(1, numtheory::lcm)
                }
            }
            Presentation::Quaternion { half } => {
                if a[1] == 1 {
                    4
                } else if a[0] == 0 {
                    1
                } else {
                    half / numtheory::gcd(*half, a[0] as u64)
                }
            }
            Presentation::Semidirect { .. } => {
                // Repeated multiplication; orders divide pm·qn.
                let mut cur: Box<[u32]> = a.to_vec().into_boxed_slice();
                let mut ord = 1u64;
                while cur.iter().any(|&x| x != 0) {
                    cur = self.mul(&cur, a);
                    ord += 1;
                }
                ord
            }
        }
    }

    fn generators(&self) -> Vec<Element> {
        match self {
            Presentation::Abelian { moduli } => (0..moduli.len())
                .map(|i| {
                    let mut w = vec![0u32; moduli.len()];
                    if moduli[i] > 1 {
                        w[i] = 1;
                    }
                    Element::Word(w.into_boxed_slice())
                })
                .collect(),
            Presentation::Semidirect { .. } => vec![
                Element::Word(vec![1, 0].into_boxed_slice()),
                Element::Word(vec![0, 1].into_boxed_slice()),
            ],
            Presentation::Dihedral { moduli } => {
                let mut gens = Vec::new();
                for i in 0..moduli.len() {
                    let mut w = vec![0u32; moduli.len() + 1];
                    if moduli[i] > 1 {
                        w[i] = 1;
                    }
                    gens.push(Element::Word(w.into_boxed_slice()));
                }
                let mut t = vec![0u32; moduli.len() + 1];
                t[moduli.len()] = 1;
                gens.push(Element::Word(t.into_boxed_slice()));
                gens
            }
            Presentation::Quaternion { .. } => vec![
                Element::Word(vec![1, 0].into_boxed_slice()),
                Element::Word(vec![0, 1].into_boxed_slice()),
            ],
        }
    }
}

/// Operational context interpreting [`Element`] values.
#[derive(Debug)]
enum Backend {
    Perm { degree: usize },
    Mat { k: usize, field: FieldSpec, scalars: Vec<u32> },
    Word { pres: Presentation },
    Prod { left: Box<FiniteGroup>, right: Box<FiniteGroup> },
}

impl Backend {
    fn identity(&self) -> Element {
        match self {
            Backend::Perm { degree } => Element::Perm(perm::identity(*degree)),
            Backend::Mat { k, .. } => Element::Mat(matrix::identity(*k)),
            Backend::Word { pres } => pres.identity(),
            Backend::Prod { .. } => Element::Pair(0, 0),
        }
    }

    fn mul(&self, a: &Element, b: &Element) -> Element {
        match (self, a, b) {
            (Backend::Perm { .. }, Element::Perm(x), Element::Perm(y)) => {
                Element::Perm(perm::compose(x, y))
            }
            (Backend::Mat { k, field, scalars }, Element::Mat(x), Element::Mat(y)) => {
                let raw = matrix::mul(field, *k, x, y);
                Element::Mat(canonical(field, raw, scalars))
            }
            (Backend::Word { pres }, Element::Word(x), Element::Word(y)) => {
                Element::Word(pres.mul(x, y))
            }
            (Backend::Prod { left, right }, Element::Pair(a1, b1), Element::Pair(a2, b2)) => {
                Element::Pair(left.mul(*a1, *a2), right.mul(*b1, *b2))
            }
            _ => panic!("element kind does not match group backend"),
        }
    }

    fn inv(&self, a: &Element) -> Element {
        match (self, a) {
            (Backend::Perm { .. }, Element::Perm(x)) => Element::Perm(perm::invert(x)),
            (Backend::Mat { k, field, scalars }, Element::Mat(x)) => {
                let raw = matrix::inv(field, *k, x);
                Element::Mat(canonical(field, raw, scalars))
            }
            (Backend::Word { pres }, Element::Word(x)) => Element::Word(pres.inv(x)),
            (Backend::Prod { left, right }, Element::Pair(a1, b1)) => {
                Element::Pair(left.inv(*a1), right.inv(*b1))
            }
            _ => panic!("element kind does not match group backend"),
        }
    }

    fn element_order(&self, a: &Element) -> u64 {
        match (self, a) {
            (Backend::Perm { .. }, Element::Perm(x)) => perm::order(x),
            (Backend::Mat { .. }, Element::Mat(_)) => {
                let id = self.identity();
                if *a == id {
                    return 1;
                }
                let mut cur = self.mul(a, a);
                let mut ord = 2u64;
                while cur != id {
                    cur = self.mul(&cur, a);
                    ord += 1;
                }
                ord
            }
            (Backend::Word { pres }, Element::Word(x)) => pres.order(x),
            (Backend::Prod { left, right }, Element::Pair(a1, b1)) => numtheory::lcm(
                left.element_order(*a1),
                right.element_order(*b1),
            ),
            _ => panic!("element kind does not match group backend"),
        }
    }
}

fn canonical(field: &FieldSpec, raw: Box<[u32]>, scalars: &[u32]) -> Box<[u32]> {
    if scalars.len() <= 1 {
        raw
    } else {
        matrix::canonicalize(field, &raw, scalars)
    }
}

/// A fully enumerated finite group with deterministic element indexing
/// (index 0 is the identity) and cached per-element orders and inverses.
#[derive(Debug)]
pub struct FiniteGroup {
    spec: GroupSpec,
    name: String,
    backend: Backend,
    elements: Vec<Element>,
    index: HashMap<Element, u32>,
    orders: Vec<u64>,
    inverses: Vec<u32>,
    generators: Vec<u32>,
    /// For semidirect constructions: whether the acting factor is faithful
    /// on the socle of the normal factor (`C_U(soc(N)) = {1}`).
    faithful_on_socle: Option<bool>,
}

impl FiniteGroup {
    /// Parse a mini-language spec and build with the default cap.
    pub fn parse_build(text: &str) -> Result<FiniteGroup> {
        Self::build(&GroupSpec::parse(text)?, DEFAULT_CAP)
    }

    /// Build the group described by `spec`, enumerating at most `cap`
    /// elements.
    pub fn build(spec: &GroupSpec, cap: usize) -> Result<FiniteGroup> {
        let predicted = predicted_order(spec)?;
        if predicted > cap as u64 {
            return Err(Error::CapExceeded { cap, seen: predicted as usize });
        }
        let (backend, gen_elements, faithful) = make_backend(spec, cap)?;
        let mut group = enumerate(spec.clone(), backend, gen_elements, cap)?;
        group.faithful_on_socle = faithful;
        if let GroupSpec::Sporadic { name, .. } = spec {
            let expected = sporadic_order(name)?;
            if group.order() as u64 != expected {
                return Err(Error::Data(format!(
                    "generators for {name} produce a group of order {}, expected {expected}",
                    group.order()
                )));
            }
        } else {
            assert_eq!(
                group.order() as u64,
                predicted,
                "enumeration of {spec} disagrees with the order formula"
            );
        }
        Ok(group)
    }

    pub fn spec(&self) -> &GroupSpec {
        &self.spec
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn identity(&self) -> u32 {
        0
    }

    pub fn element(&self, i: u32) -> &Element {
        &self.elements[i as usize]
    }

    /// Index of an element value, if it belongs to the group.
    pub fn find(&self, e: &Element) -> Option<u32> {
        self.index.get(e).copied()
    }

    pub fn generators(&self) -> &[u32] {
        &self.generators
    }

    pub fn mul(&self, a: u32, b: u32) -> u32 {
        let prod = self.backend.mul(&self.elements[a as usize], &self.elements[b as usize]);
        *self
            .index
            .get(&prod)
            .expect("closure invariant: product of members is a member")
    }

    pub fn inv(&self, a: u32) -> u32 {
        self.inverses[a as usize]
    }

    /// `x^k` by binary powering on indices.
    pub fn power(&self, x: u32, k: u64) -> u32 {
        let ord = self.orders[x as usize];
        let mut e = k % ord;
        let mut base = x;
        let mut acc = 0u32;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    pub fn element_order(&self, x: u32) -> u64 {
        self.orders[x as usize]
    }

    /// Cached orders, indexed by element.
    pub fn orders(&self) -> &[u64] {
        &self.orders
    }

    /// Whether `a` and `b` commute, tested on element values (two raw
    /// multiplications, no index lookups).
    pub fn commutes(&self, a: u32, b: u32) -> bool {
        let (ea, eb) = (&self.elements[a as usize], &self.elements[b as usize]);
        self.backend.mul(ea, eb) == self.backend.mul(eb, ea)
    }

    /// `⟨x⟩` as a sorted index set (always contains the identity).
    pub fn cyclic_subgroup(&self, x: u32) -> Vec<u32> {
        let mut out = vec![0u32];
        let mut cur = x;
        while cur != 0 {
            out.push(cur);
            cur = self.mul(cur, x);
        }
        out.sort_unstable();
        out
    }

    /// Centralizer of a set of elements, as a sorted index set.
    pub fn centralizer_of_set(&self, s: &[u32]) -> Vec<u32> {
        (0..self.order() as u32)
            .filter(|&g| s.iter().all(|&x| self.commutes(g, x)))
            .collect()
    }

    /// Centralizer of a single element.
    pub fn centralizer(&self, x: u32) -> Vec<u32> {
        self.centralizer_of_set(&[x])
    }

    /// `g x g⁻¹`.
    pub fn conjugate(&self, g: u32, x: u32) -> u32 {
        self.mul(self.mul(g, x), self.inv(g))
    }

    /// True iff `g·sub·g⁻¹ = sub` for every `g` in `over`. Both arguments
    /// are index sets; `sub` must be a subgroup for the result to mean
    /// normality.
    pub fn is_normal_in(&self, sub: &[u32], over: &[u32]) -> bool {
        let mut sorted = sub.to_vec();
        sorted.sort_unstable();
        over.iter().all(|&g| {
            sub.iter()
                .all(|&s| sorted.binary_search(&self.conjugate(g, s)).is_ok())
        })
    }

    /// Subgroup generated by `gens`, as a sorted index set.
    pub fn closure(&self, gens: &[u32]) -> Vec<u32> {
        let mut seen = vec![false; self.order()];
        seen[0] = true;
        let mut frontier = vec![0u32];
        let mut head = 0;
        while head < frontier.len() {
            let x = frontier[head];
            head += 1;
            for &g in gens {
                let y = self.mul(x, g);
                if !seen[y as usize] {
                    seen[y as usize] = true;
                    frontier.push(y);
                }
            }
        }
        frontier.sort_unstable();
        frontier
    }

    /// Conjugacy classes, each sorted ascending, ordered by least member.
    pub fn conjugacy_classes(&self) -> Vec<Vec<u32>> {
        let n = self.order();
        let mut seen = vec![false; n];
        let mut classes = Vec::new();
        let gen_invs: Vec<(u32, u32)> = self
            .generators
            .iter()
            .map(|&g| (g, self.inv(g)))
            .collect();
        for rep in 0..n as u32 {
            if seen[rep as usize] {
                continue;
            }
            seen[rep as usize] = true;
            let mut class = vec![rep];
            let mut head = 0;
            while head < class.len() {
                let x = class[head];
                head += 1;
                for &(g, gi) in &gen_invs {
                    let y = self.mul(self.mul(g, x), gi);
                    if !seen[y as usize] {
                        seen[y as usize] = true;
                        class.push(y);
                    }
                }
            }
            class.sort_unstable();
            classes.push(class);
        }
        classes
    }

    pub fn is_abelian(&self) -> bool {
        self.generators
            .iter()
            .all(|&g| self.generators.iter().all(|&h| self.commutes(g, h)))
    }

    /// Group exponent: lcm of all element orders.
    pub fn exponent(&self) -> u64 {
        self.orders.iter().copied().fold(1, numtheory::lcm)
    }

    /// For semidirect constructions `C_{p^m} ⋊ C_{q^n}`: whether the acting
    /// cyclic factor is faithful on the socle of the normal factor.
    pub fn faithful_on_socle(&self) -> Option<bool> {
        self.faithful_on_socle
    }

    /// Parse a 1-based disjoint-cycle string as an element of this
    /// permutation group. Errors if the group is not permutation-backed or
    /// the permutation is not a member.
    pub fn element_from_cycles(&self, text: &str) -> Result<u32> {
        let degree = match &self.backend {
            Backend::Perm { degree } => *degree,
            _ => {
                return Err(Error::InvalidInput(
                    "cycle notation only addresses permutation groups".into(),
                ))
            }
        };
        let p = perm::parse_cycles(degree, text)?;
        self.find(&Element::Perm(p)).ok_or_else(|| {
            Error::InvalidInput(format!("permutation {text} is not a member of {}", self.name))
        })
    }

    /// Human-readable form of one element.
    pub fn element_repr(&self, x: u32) -> String {
        match (&self.backend, &self.elements[x as usize]) {
            (Backend::Perm { .. }, Element::Perm(p)) => perm::format_cycles(p),
            (Backend::Mat { k, field, .. }, Element::Mat(m)) => matrix::render(field, *k, m),
            (Backend::Word { .. }, Element::Word(w)) => {
                let mut s = String::from("[");
                for (i, e) in w.iter().enumerate() {
                    if i > 0 {
                        s.push(',');
                    }
                    let _ = write!(s, "{e}");
                }
                s.push(']');
                s
            }
            (Backend::Prod { left, right }, Element::Pair(a, b)) => {
                format!("({},{})", left.element_repr(*a), right.element_repr(*b))
            }
            _ => unreachable!("element kind matches backend"),
        }
    }

    /// The field of a matrix-backed group.
    pub fn field(&self) -> Option<&FieldSpec> {
        match &self.backend {
            Backend::Mat { field, .. } => Some(field),
            _ => None,
        }
    }

    /// For matrix-backed groups: resolve a row-major matrix of field codes
    /// to an element index, canonicalizing for projective constructions.
    /// Errors if the group is not matrix-backed or the matrix (coset) is
    /// not a member.
    pub fn matrix_element_codes(&self, entries: &[u32]) -> Result<u32> {
        let (k, field, scalars) = match &self.backend {
            Backend::Mat { k, field, scalars } => (*k, field, scalars),
            _ => {
                return Err(Error::InvalidInput(
                    "matrix entries only address matrix groups".into(),
                ))
            }
        };
        if entries.len() != k * k {
            return Err(Error::InvalidInput(format!(
                "expected {} entries for a {k}x{k} matrix, got {}",
                k * k,
                entries.len()
            )));
        }
        if entries.iter().any(|&e| e as u64 >= field.order()) {
            return Err(Error::InvalidInput("matrix entry outside the field".into()));
        }
        let m = canonical(field, entries.to_vec().into_boxed_slice(), scalars);
        self.find(&Element::Mat(m)).ok_or_else(|| {
            Error::InvalidInput(format!("matrix is not a member of {}", self.name))
        })
    }

    /// Like [`Self::matrix_element_codes`] but with integer entries reduced
    /// into the prime subfield (so `-1` means `p - 1`).
    pub fn matrix_element(&self, entries: &[i64]) -> Result<u32> {
        let field = self.field().ok_or_else(|| {
            Error::InvalidInput("matrix entries only address matrix groups".into())
        })?;
        let codes: Vec<u32> = entries.iter().map(|&e| field.from_int(e)).collect();
        self.matrix_element_codes(&codes)
    }

    /// The two component groups of a product construction.
    pub fn product_components(&self) -> Option<(&FiniteGroup, &FiniteGroup)> {
        match &self.backend {
            Backend::Prod { left, right } => Some((left, right)),
            _ => None,
        }
    }

    /// Component indices of a product element.
    pub fn pair_parts(&self, x: u32) -> Option<(u32, u32)> {
        match self.elements[x as usize] {
            Element::Pair(a, b) => Some((a, b)),
            _ => None,
        }
    }
}

/// Breadth-first closure from the generator sequence.
fn enumerate(
    spec: GroupSpec,
    backend: Backend,
    gen_elements: Vec<Element>,
    cap: usize,
) -> Result<FiniteGroup> {
    let id = backend.identity();
    let mut elements = vec![id.clone()];
    let mut index: HashMap<Element, u32> = HashMap::new();
    index.insert(id, 0);
    let mut head = 0usize;
    while head < elements.len() {
        let cur = elements[head].clone();
        for g in &gen_elements {
            let prod = backend.mul(&cur, g);
            if !index.contains_key(&prod) {
                if elements.len() >= cap {
                    return Err(Error::CapExceeded { cap, seen: elements.len() + 1 });
                }
                index.insert(prod.clone(), elements.len() as u32);
                elements.push(prod);
            }
        }
        head += 1;
    }

    let orders: Vec<u64> = elements.iter().map(|e| backend.element_order(e)).collect();
    let inverses: Vec<u32> = elements
        .iter()
        .map(|e| {
            *index
                .get(&backend.inv(e))
                .expect("closure invariant: inverse of a member is a member")
        })
        .collect();
    let generators: Vec<u32> = gen_elements
        .iter()
        .map(|g| *index.get(g).expect("generators are members"))
        .collect();

    Ok(FiniteGroup {
        name: spec.display_name(),
        spec,
        backend,
        elements,
        index,
        orders,
        inverses,
        generators,
        faithful_on_socle: None,
    })
}

fn make_backend(
    spec: &GroupSpec,
    cap: usize,
) -> Result<(Backend, Vec<Element>, Option<bool>)> {
    match spec {
        GroupSpec::Cyclic(n) => {
            require(*n >= 1, "cyclic order must be >= 1")?;
            let pres = Presentation::Abelian { moduli: vec![*n] };
            let gens = pres.generators();
            Ok((Backend::Word { pres }, gens, None))
        }
        GroupSpec::Abelian(parts) => {
            require(parts.iter().all(|&n| n >= 1), "ab: factors must be >= 1")?;
            let pres = Presentation::Abelian { moduli: parts.clone() };
            let gens = pres.generators();
            Ok((Backend::Word { pres }, gens, None))
        }
        GroupSpec::Sym(n) => {
            let degree = *n as usize;
            require(degree >= 1 && degree <= 256, "sym degree must be in 1..=256")?;
            let mut gens = Vec::new();
            if degree >= 2 {
                gens.push(Element::Perm(perm::parse_cycles(degree, "(1,2)")?));
                let full: Vec<usize> = (1..=degree).collect();
                gens.push(Element::Perm(perm::from_cycles(degree, &[full])?));
            }
            Ok((Backend::Perm { degree }, gens, None))
        }
        GroupSpec::Alt(n) => {
            let degree = *n as usize;
            require(degree >= 1 && degree <= 256, "alt degree must be in 1..=256")?;
            let mut gens = Vec::new();
            if degree >= 3 {
                gens.push(Element::Perm(perm::from_cycles(degree, &[vec![1, 2, 3]])?));
                let cycle: Vec<usize> = if degree % 2 == 1 {
                    (1..=degree).collect()
                } else {
                    (2..=degree).collect()
                };
                if cycle.len() >= 2 {
                    gens.push(Element::Perm(perm::from_cycles(degree, &[cycle])?));
                }
            }
            Ok((Backend::Perm { degree }, gens, None))
        }
        GroupSpec::Dihedral(sub) => {
            let a = FiniteGroup::build(sub, cap)?;
            let moduli = abelian_moduli(&a).ok_or_else(|| {
                Error::InvalidParam(format!(
                    "dih: requires an abelian cyclic-product spec, got {sub}"
                ))
            })?;
            let pres = Presentation::Dihedral { moduli };
            let gens = pres.generators();
            Ok((Backend::Word { pres }, gens, None))
        }
        GroupSpec::Quaternion(total) => {
            require(
                *total >= 4 && total % 4 == 0,
                "generalized quaternion order must be a positive multiple of 4",
            )?;
            let pres = Presentation::Quaternion { half: total / 2 };
            let gens = pres.generators();
            Ok((Backend::Word { pres }, gens, None))
        }
        GroupSpec::SpecialLinear(k, q) | GroupSpec::ProjSpecialLinear(k, q) => {
            require(*k >= 2 && *k <= 6, "matrix dimension must be in 2..=6")?;
            let field = FieldSpec::new(*q)?;
            let ku = *k as usize;
            let scalars = if matches!(spec, GroupSpec::ProjSpecialLinear(..)) {
                matrix::unit_scalars(&field, ku)
            } else {
                vec![1]
            };
            let gens: Vec<Element> = matrix::sl_generators(&field, ku)
                .into_iter()
                .map(|m| Element::Mat(canonical(&field, m, &scalars)))
                .collect();
            Ok((Backend::Mat { k: ku, field, scalars }, gens, None))
        }
        GroupSpec::Semidirect { p, m, q, n, k } => {
            require(numtheory::is_prime(*p), "sd: p must be prime")?;
            require(numtheory::is_prime(*q), "sd: q must be prime")?;
            require(*m >= 1 && *n >= 1, "sd: exponents must be >= 1")?;
            let pm = p
                .checked_pow(*m)
                .ok_or_else(|| Error::InvalidParam("sd: p^m overflows".into()))?;
            let qn = q
                .checked_pow(*n)
                .ok_or_else(|| Error::InvalidParam("sd: q^n overflows".into()))?;
            let act = k % pm;
            if powmod(act, qn, pm) != 1 {
                return Err(Error::InvalidParam(format!(
                    "sd: action a -> a^{k} is not an automorphism of order dividing {q}^{n} \
                     (k^(q^n) != 1 mod p^m)"
                )));
            }
            // Faithful on soc(N) = the order-p subgroup iff the index-q
            // subgroup of the acting factor moves it: k^(q^(n-1)) != 1 mod p.
            let faithful = powmod(act % p, qn / q, *p) != 1;
            let pres = Presentation::Semidirect { pm, qn, act };
            let gens = pres.generators();
            Ok((Backend::Word { pres }, gens, Some(faithful)))
        }
        GroupSpec::Product(a, b) => {
            let left = FiniteGroup::build(a, cap)?;
            let right = FiniteGroup::build(b, cap)?;
            let mut gens = Vec::new();
            for &g in left.generators() {
                gens.push(Element::Pair(g, 0));
            }
            for &g in right.generators() {
                gens.push(Element::Pair(0, g));
            }
            Ok((
                Backend::Prod { left: Box::new(left), right: Box::new(right) },
                gens,
                None,
            ))
        }
        GroupSpec::Sporadic { name, file } => {
            let path = resolve_data_path(file)?;
            let (degree, perms) = read_generator_file(&path)?;
            let gens = perms.into_iter().map(Element::Perm).collect();
            let _ = sporadic_order(name)?; // reject unknown names early
            Ok((Backend::Perm { degree }, gens, None))
        }
    }
}

/// Build `C_{p^m} ⋊ C_{q^n}` with the action `a ↦ a^k`.
pub fn semidirect_cyclic(p: u64, m: u32, q: u64, n: u32, k: u64) -> Result<FiniteGroup> {
    FiniteGroup::build(&GroupSpec::Semidirect { p, m, q, n, k }, DEFAULT_CAP)
}

/// Build the generalized dihedral group over an abelian group. The input
/// must be a cyclic-product construction (`cyclic:`, `ab:`, or a product of
/// those); anything else is rejected.
pub fn generalized_dihedral(a: &FiniteGroup) -> Result<FiniteGroup> {
    if !a.is_abelian() {
        return Err(Error::InvalidParam(format!(
            "generalized dihedral requires an abelian group, got {}",
            a.name()
        )));
    }
    FiniteGroup::build(
        &GroupSpec::Dihedral(Box::new(a.spec().clone())),
        DEFAULT_CAP,
    )
}

/// Load a permutation group from a generator file and check its order
/// against the table of known sporadic group orders.
pub fn load_sporadic(name: &str, file: &str, cap: usize) -> Result<FiniteGroup> {
    FiniteGroup::build(
        &GroupSpec::Sporadic { name: name.to_string(), file: file.to_string() },
        cap,
    )
}

fn require(cond: bool, msg: &str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::InvalidParam(msg.to_string()))
    }
}

/// Moduli of an abelian cyclic-product construction, recursing through
/// products; `None` if the group is not built that way.
fn abelian_moduli(g: &FiniteGroup) -> Option<Vec<u64>> {
    match &g.backend {
        Backend::Word { pres: Presentation::Abelian { moduli } } => Some(moduli.clone()),
        Backend::Prod { left, right } => {
            let mut m = abelian_moduli(left)?;
            m.extend(abelian_moduli(right)?);
            Some(m)
        }
        _ => None,
    }
}

fn factorial(n: u32) -> Result<u64> {
    if n > 20 {
        return Err(Error::InvalidParam(format!("{n}! overflows u64")));
    }
    Ok((2..=n as u64).product())
}

/// Known orders for groups loadable from generator files.
fn sporadic_order(name: &str) -> Result<u64> {
    match name {
        "M11" => Ok(7_920),
        "M12" => Ok(95_040),
        "M22" => Ok(443_520),
        "M23" => Ok(10_200_960),
        "M24" => Ok(244_823_040),
        "J1" => Ok(175_560),
        "J2" => Ok(604_800),
        other => Err(Error::InvalidParam(format!(
            "unknown sporadic group name `{other}`"
        ))),
    }
}

/// Exact order the construction will produce (used as the cap pre-check and
/// as a post-enumeration assertion).
pub fn predicted_order(spec: &GroupSpec) -> Result<u64> {
    match spec {
        GroupSpec::Cyclic(n) => {
            require(*n >= 1, "cyclic order must be >= 1")?;
            Ok(*n)
        }
        GroupSpec::Abelian(parts) => {
            require(parts.iter().all(|&x| x >= 1), "ab: factors must be >= 1")?;
            parts.iter().try_fold(1u64, |acc, &x| {
                acc.checked_mul(x)
                    .ok_or_else(|| Error::InvalidParam("abelian order overflows".into()))
            })
        }
        GroupSpec::Sym(n) => factorial(*n),
        GroupSpec::Alt(n) => {
            if *n <= 2 {
                Ok(1)
            } else {
                Ok(factorial(*n)? / 2)
            }
        }
        GroupSpec::Dihedral(sub) => {
            let a = predicted_order(sub)?;
            a.checked_mul(2)
                .ok_or_else(|| Error::InvalidParam("dihedral order overflows".into()))
        }
        GroupSpec::Quaternion(total) => {
            require(
                *total >= 4 && total % 4 == 0,
                "generalized quaternion order must be a positive multiple of 4",
            )?;
            Ok(*total)
        }
        GroupSpec::SpecialLinear(k, q) => {
            numtheory::as_prime_power(*q)
                .ok_or_else(|| Error::InvalidParam(format!("{q} is not a prime power")))?;
            matrix::sl_order(*k, *q)
        }
        GroupSpec::ProjSpecialLinear(k, q) => {
            numtheory::as_prime_power(*q)
                .ok_or_else(|| Error::InvalidParam(format!("{q} is not a prime power")))?;
            Ok(matrix::sl_order(*k, *q)? / numtheory::gcd(*k as u64, *q - 1))
        }
        GroupSpec::Semidirect { p, m, q, n, .. } => {
            let pm = p
                .checked_pow(*m)
                .ok_or_else(|| Error::InvalidParam("sd: p^m overflows".into()))?;
            let qn = q
                .checked_pow(*n)
                .ok_or_else(|| Error::InvalidParam("sd: q^n overflows".into()))?;
            pm.checked_mul(qn)
                .ok_or_else(|| Error::InvalidParam("sd: order overflows".into()))
        }
        GroupSpec::Product(a, b) => {
            let (oa, ob) = (predicted_order(a)?, predicted_order(b)?);
            oa.checked_mul(ob)
                .ok_or_else(|| Error::InvalidParam("product order overflows".into()))
        }
        GroupSpec::Sporadic { name, .. } => sporadic_order(name),
    }
}

/// Resolve a data-file path: as given if it exists, else relative to the
/// workspace root (two levels above this crate's manifest directory).
fn resolve_data_path(file: &str) -> Result<PathBuf> {
    let direct = Path::new(file);
    if direct.exists() {
        return Ok(direct.to_path_buf());
    }
    let root = Path::new(env!("CARGO_MANIFEST_DIR")).join("../..").join(file);
    if root.exists() {
        return Ok(root);
    }
    Err(Error::Io {
        path: file.to_string(),
        source: std::io::Error::new(std::io::ErrorKind::NotFound, "generator file not found"),
    })
}

/// Generator file format: `#` comments and blank lines ignored; first
/// payload line is the degree; each following line is one permutation in
/// 1-based disjoint-cycle notation.
fn read_generator_file(path: &Path) -> Result<(usize, Vec<Box<[u8]>>)> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Io {
        path: path.display().to_string(),
        source: e,
    })?;
    let mut degree: Option<usize> = None;
    let mut perms = Vec::new();
    for line in text.lines() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        match degree {
            None => {
                let d: usize = line.parse().map_err(|_| {
                    Error::Parse(format!("first payload line must be the degree, got `{line}`"))
                })?;
                if d == 0 || d > 256 {
                    return Err(Error::Parse(format!("degree {d} out of range 1..=256")));
                }
                degree = Some(d);
            }
            Some(d) => perms.push(perm::parse_cycles(d, line)?),
        }
    }
    let degree = degree.ok_or_else(|| Error::Parse("empty generator file".into()))?;
    if perms.is_empty() {
        return Err(Error::Parse("generator file lists no permutations".into()));
    }
    Ok((degree, perms))
}
