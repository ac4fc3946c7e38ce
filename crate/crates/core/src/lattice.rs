//! Root data for C2, G2 and F4 in Bourbaki numbering.
//!
//! Roots are kept twice: as weights in the ω-basis (the public coordinate
//! system) and as ε-vectors with every coordinate doubled, which keeps the
//! F4 half-integers integral.

use std::collections::{BTreeMap, HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use num_rational::Ratio;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::weight::{Weight, MAX_RANK};

type Eps = [i64; MAX_RANK];
type Mat = [[i64; MAX_RANK]; MAX_RANK];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum SystemId {
    C2,
    G2,
    F4,
}

impl SystemId {
    pub const ALL: [SystemId; 3] = [SystemId::C2, SystemId::G2, SystemId::F4];

    pub fn name(self) -> &'static str {
        match self {
            SystemId::C2 => "C2",
            SystemId::G2 => "G2",
            SystemId::F4 => "F4",
        }
    }

    pub fn rank(self) -> usize {
        match self {
            SystemId::C2 | SystemId::G2 => 2,
            SystemId::F4 => 4,
        }
    }

    /// The characteristic in which the exceptional isogeny exists.
    pub fn p(self) -> i64 {
        match self {
            SystemId::C2 | SystemId::F4 => 2,
            SystemId::G2 => 3,
        }
    }

    pub fn data(self) -> &'static RootSystemData {
        static CACHE: [OnceLock<RootSystemData>; 3] = [OnceLock::new(), OnceLock::new(), OnceLock::new()];
        let slot = match self {
            SystemId::C2 => &CACHE[0],
            SystemId::G2 => &CACHE[1],
            SystemId::F4 => &CACHE[2],
        };
        slot.get_or_init(|| build_root_system(self))
    }
}

impl fmt::Display for SystemId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SystemId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_uppercase().as_str() {
            "C2" => Ok(SystemId::C2),
            "G2" => Ok(SystemId::G2),
            "F4" => Ok(SystemId::F4),
            _ => Err(Error::UnknownSystem(s.to_string())),
        }
    }
}

#[derive(Clone, Debug)]
pub struct Root {
    /// ω-coordinates.
    pub weight: Weight,
    /// Doubled ε-coordinates.
    pub eps: Eps,
    /// Coordinates over the simple roots.
    pub simple_coords: Weight,
    pub long: bool,
    pub positive: bool,
    /// `⟨ω_i, α^∨⟩` for each i; pairing with the coroot is a dot product with this.
    pub coroot: Weight,
}

impl Root {
    pub fn height(&self) -> i64 {
        self.simple_coords.coeffs().iter().sum()
    }
}

/// A Weyl group element acting on ω-coordinates.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct WeylElement {
    rank: u8,
    m: Mat,
    pub length: u32,
}

impl WeylElement {
    pub fn identity(rank: usize) -> Self {
        let mut m = [[0; MAX_RANK]; MAX_RANK];
        for (i, row) in m.iter_mut().enumerate().take(rank) {
            row[i] = 1;
        }
        WeylElement { rank: rank as u8, m, length: 0 }
    }

    pub fn apply(&self, w: Weight) -> Weight {
        let n = self.rank as usize;
        let mut out = [0i64; MAX_RANK];
        for (i, o) in out.iter_mut().enumerate().take(n) {
            *o = (0..n).map(|j| self.m[i][j] * w.get(j)).sum();
        }
        Weight::new(&out[..n])
    }

    pub fn matrix(&self) -> Vec<Vec<i64>> {
        let n = self.rank as usize;
        (0..n).map(|i| self.m[i][..n].to_vec()).collect()
    }

    fn left_mul(&self, other: &Mat) -> Mat {
        let n = self.rank as usize;
        let mut out = [[0; MAX_RANK]; MAX_RANK];
        for i in 0..n {
            for j in 0..n {
                out[i][j] = (0..n).map(|k| other[i][k] * self.m[k][j]).sum();
            }
        }
        out
    }
}

impl fmt::Debug for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "WeylElement(len {}, {:?})", self.length, self.matrix())
    }
}

#[derive(Debug)]
pub struct RootSystemData {
    pub id: SystemId,
    pub p: i64,
    pub rank: usize,
    fund_eps: Vec<Eps>,
    pub roots: Vec<Root>,
    index: HashMap<Weight, usize>,
    /// Indices into `roots` of α_1..α_n.
    pub simple: Vec<usize>,
    /// `cartan[i][j] = ⟨α_i, α_j^∨⟩`; row i is α_i in the ω-basis.
    pub cartan: Vec<Vec<i64>>,
    /// Inverse of the transposed Cartan matrix: ω-coordinates to simple-root coordinates.
    to_simple: Vec<Vec<Ratio<i64>>>,
    pub cartan_det: i64,
    pub alpha0: usize,
    pub coxeter_h: i64,
    pub phi_s: Vec<usize>,
    /// β_1.. in the fixed enumeration order.
    pub pi_s: Vec<usize>,
    pub weyl: Vec<WeylElement>,
}

fn dot(a: &Eps, b: &Eps) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn eps(v: &[i64]) -> Eps {
    let mut e = [0; MAX_RANK];
    e[..v.len()].copy_from_slice(v);
    e
}

fn raw_roots(id: SystemId) -> Vec<Eps> {
    let mut out = Vec::new();
    match id {
        SystemId::C2 => {
            for &(a, b) in &[(4, 0), (0, 4), (2, 2), (2, -2)] {
                out.push(eps(&[a, b]));
                out.push(eps(&[-a, -b]));
            }
        }
        SystemId::G2 => {
            for i in 0..3 {
                for j in 0..3 {
                    if i != j {
                        let mut v = [0; 3];
                        v[i] = 2;
                        v[j] = -2;
                        out.push(eps(&v));
                    }
                }
                let mut v = [-2; 3];
                v[i] = 4;
                out.push(eps(&v));
                out.push(eps(&v.map(|x| -x)));
            }
        }
        SystemId::F4 => {
            for i in 0..4 {
                for sgn in [2, -2] {
                    let mut v = [0; 4];
                    v[i] = sgn;
                    out.push(v);
                }
                for j in (i + 1)..4 {
                    for (si, sj) in [(2, 2), (2, -2), (-2, 2), (-2, -2)] {
                        let mut v = [0; 4];
                        v[i] = si;
                        v[j] = sj;
                        out.push(v);
                    }
                }
            }
            for mask in 0..16 {
                let v: Eps = std::array::from_fn(|k| if mask >> k & 1 == 1 { -1 } else { 1 });
                out.push(v);
            }
        }
    }
    out
}

fn simple_eps(id: SystemId) -> Vec<Eps> {
    match id {
        SystemId::C2 => vec![eps(&[2, -2]), eps(&[0, 4])],
        SystemId::G2 => vec![eps(&[2, -2, 0]), eps(&[-4, 2, 2])],
        SystemId::F4 => vec![
            eps(&[0, 2, -2, 0]),
            eps(&[0, 0, 2, -2]),
            eps(&[0, 0, 0, 2]),
            eps(&[1, -1, -1, -1]),
        ],
    }
}

fn fundamental_eps(id: SystemId) -> Vec<Eps> {
    match id {
        SystemId::C2 => vec![eps(&[2, 0]), eps(&[2, 2])],
        SystemId::G2 => vec![eps(&[0, -2, 2]), eps(&[-2, -2, 4])],
        SystemId::F4 => vec![eps(&[2, 2, 0, 0]), eps(&[4, 2, 2, 0]), eps(&[3, 1, 1, 1]), eps(&[2, 0, 0, 0])],
    }
}

/// The short simple roots in the order β_1, β_2, ..., as simple-root coordinates.
fn listed_pi_s(id: SystemId) -> Vec<Vec<i64>> {
    match id {
        SystemId::C2 | SystemId::G2 => vec![vec![1, 0], vec![1, 1]],
        SystemId::F4 => vec![vec![0, 0, 1, 0], vec![0, 0, 0, 1], vec![0, 1, 1, 0], vec![1, 1, 1, 0]],
    }
}

fn pairing_eps(v: &Eps, alpha: &Eps) -> i64 {
    let num = 2 * dot(v, alpha);
    let den = dot(alpha, alpha);
    assert!(num % den == 0, "non-integral pairing");
    num / den
}

/// Gauss–Jordan inverse over ℚ.
fn rational_inverse(a: &[Vec<i64>]) -> Vec<Vec<Ratio<i64>>> {
    let n = a.len();
    let mut m: Vec<Vec<Ratio<i64>>> = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r: Vec<Ratio<i64>> = row.iter().map(|&x| Ratio::from_integer(x)).collect();
            r.extend((0..n).map(|j| if i == j { Ratio::one() } else { Ratio::zero() }));
            r
        })
        .collect();
    for col in 0..n {
        let piv = (col..n).find(|&r| !m[r][col].is_zero()).expect("singular matrix");
        m.swap(col, piv);
        let inv = m[col][col].recip();
        for x in m[col].iter_mut() {
            *x *= inv;
        }
        for r in 0..n {
            if r != col && !m[r][col].is_zero() {
                let f = m[r][col];
                let pivot_row = m[col].clone();
                for (x, y) in m[r].iter_mut().zip(pivot_row) {
                    *x -= f * y;
                }
            }
        }
    }
    m.into_iter().map(|row| row[n..].to_vec()).collect()
}

fn determinant(a: &[Vec<i64>]) -> i64 {
    let n = a.len();
    let mut m: Vec<Vec<Ratio<i64>>> =
        a.iter().map(|r| r.iter().map(|&x| Ratio::from_integer(x)).collect()).collect();
    let mut det = Ratio::one();
    for col in 0..n {
        let Some(piv) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return 0;
        };
        if piv != col {
            m.swap(col, piv);
            det = -det;
        }
        det *= m[col][col];
        for r in (col + 1)..n {
            let f = m[r][col] / m[col][col];
            let pivot_row = m[col].clone();
            for (x, y) in m[r].iter_mut().zip(pivot_row) {
                *x -= f * y;
            }
        }
    }
    assert!(det.is_integer());
    det.to_integer()
}

/// Builds the full root datum. Panics only if the hard-coded data is
/// internally inconsistent, which the test-suite rules out.
pub fn build_root_system(id: SystemId) -> RootSystemData {
    let rank = id.rank();
    let fund = fundamental_eps(id);
    let simple_e = simple_eps(id);

    let to_omega = |v: &Eps| -> Weight {
        let c: Vec<i64> = simple_e.iter().map(|a| pairing_eps(v, a)).collect();
        Weight::new(&c)
    };

    let cartan: Vec<Vec<i64>> = simple_e
        .iter()
        .map(|ai| simple_e.iter().map(|aj| pairing_eps(ai, aj)).collect())
        .collect();
    let cartan_t: Vec<Vec<i64>> = (0..rank).map(|i| (0..rank).map(|j| cartan[j][i]).collect()).collect();
    let to_simple = rational_inverse(&cartan_t);
    let cartan_det = determinant(&cartan);

    let raw = raw_roots(id);
    let max_len = raw.iter().map(|v| dot(v, v)).max().unwrap();
    let min_len = raw.iter().map(|v| dot(v, v)).min().unwrap();
    let mut roots: Vec<Root> = raw
        .iter()
        .map(|v| {
            let weight = to_omega(v);
            let sc = apply_rational(&to_simple, weight);
            let simple_coords = Weight::new(&sc.iter().map(|x| x.to_integer()).collect::<Vec<_>>());
            assert!(sc.iter().all(|x| x.is_integer()));
            let positive = simple_coords.coeffs().iter().all(|&x| x >= 0);
            let coroot = Weight::new(&fund.iter().map(|f| pairing_eps(f, v)).collect::<Vec<_>>());
            Root { weight, eps: *v, simple_coords, long: dot(v, v) == max_len && max_len != min_len, positive, coroot }
        })
        .collect();
    roots.sort_by(|a, b| (!a.positive, a.height().abs(), a.weight).cmp(&(!b.positive, b.height().abs(), b.weight)));
    let index: HashMap<Weight, usize> = roots.iter().enumerate().map(|(i, r)| (r.weight, i)).collect();
    assert_eq!(index.len(), roots.len(), "duplicate root");

    let simple: Vec<usize> = simple_e.iter().map(|v| index[&to_omega(v)]).collect();

    let alpha0 = (0..roots.len())
        .filter(|&i| roots[i].positive && !roots[i].long)
        .max_by_key(|&i| roots[i].height())
        .unwrap();
    let coxeter_h = roots.len() as i64 / rank as i64;

    let phi_s: Vec<usize> = (0..roots.len()).filter(|&i| !roots[i].long).collect();
    let pi_s: Vec<usize> = listed_pi_s(id)
        .iter()
        .map(|sc| {
            (0..roots.len())
                .find(|&i| roots[i].simple_coords.coeffs() == sc.as_slice())
                .expect("listed short simple root is not a root")
        })
        .collect();

    let weyl = weyl_closure(rank, &cartan);

    let data = RootSystemData {
        id,
        p: id.p(),
        rank,
        fund_eps: fund,
        roots,
        index,
        simple,
        cartan,
        to_simple,
        cartan_det,
        alpha0,
        coxeter_h,
        phi_s,
        pi_s,
        weyl,
    };
    let mut computed = data.computed_pi_s();
    let mut listed = data.pi_s.clone();
    computed.sort();
    listed.sort();
    assert_eq!(computed, listed, "{id}: listed short simple roots disagree with the computed simple system");
    data
}

fn apply_rational(m: &[Vec<Ratio<i64>>], w: Weight) -> Vec<Ratio<i64>> {
    m.iter()
        .map(|row| row.iter().zip(w.coeffs()).map(|(a, &b)| a * b).sum())
        .collect()
}

fn weyl_closure(rank: usize, cartan: &[Vec<i64>]) -> Vec<WeylElement> {
    let refl: Vec<Mat> = (0..rank)
        .map(|k| {
            let mut m = [[0; MAX_RANK]; MAX_RANK];
            for i in 0..rank {
                for j in 0..rank {
                    m[i][j] = i64::from(i == j) - if j == k { cartan[k][i] } else { 0 };
                }
            }
            m
        })
        .collect();
    let id = WeylElement::identity(rank);
    let mut seen: HashMap<Mat, ()> = HashMap::from([(id.m, ())]);
    let mut out = vec![id.clone()];
    let mut queue = VecDeque::from([id]);
    while let Some(w) = queue.pop_front() {
        for s in &refl {
            let m = w.left_mul(s);
            if seen.insert(m, ()).is_none() {
                let e = WeylElement { rank: rank as u8, m, length: w.length + 1 };
                out.push(e.clone());
                queue.push_back(e);
            }
        }
    }
    out
}

impl RootSystemData {
    pub fn omega(&self, i: usize) -> Weight {
        Weight::fundamental(self.rank, i)
    }

    pub fn zero(&self) -> Weight {
        Weight::zero(self.rank)
    }

    /// Builds `Σ c_i ω_i` from the coefficient list.
    pub fn w(&self, coeffs: &[i64]) -> Weight {
        assert_eq!(coeffs.len(), self.rank);
        Weight::new(coeffs)
    }

    pub fn rho(&self) -> Weight {
        Weight::new(&vec![1; self.rank])
    }

    /// α_i in the ω-basis, `i` counted from 1.
    pub fn simple_root(&self, i: usize) -> Weight {
        self.roots[self.simple[i - 1]].weight
    }

    pub fn is_short_simple(&self, i: usize) -> bool {
        !self.roots[self.simple[i - 1]].long
    }

    pub fn alpha0(&self) -> Weight {
        self.roots[self.alpha0].weight
    }

    /// β_i, counted from 1.
    pub fn beta(&self, i: usize) -> Weight {
        self.roots[self.pi_s[i - 1]].weight
    }

    pub fn betas(&self) -> Vec<Weight> {
        self.pi_s.iter().map(|&i| self.roots[i].weight).collect()
    }

    pub fn root(&self, alpha: Weight) -> Option<&Root> {
        self.index.get(&alpha).map(|&i| &self.roots[i])
    }

    pub fn is_root(&self, alpha: Weight) -> bool {
        self.index.contains_key(&alpha)
    }

    /// Doubled ε-coordinates of a weight.
    pub fn to_eps(&self, w: Weight) -> Eps {
        let mut out = [0; MAX_RANK];
        for (c, f) in w.coeffs().iter().zip(&self.fund_eps) {
            for k in 0..MAX_RANK {
                out[k] += c * f[k];
            }
        }
        out
    }

    /// `⟨λ, α^∨⟩`, evaluated through the ε inner product.
    pub fn pair(&self, lambda: Weight, alpha: Weight) -> Result<i64> {
        lambda.check_rank(self.rank)?;
        let root = self.root(alpha).ok_or(Error::NotARoot(alpha, self.id.name()))?;
        Ok(pairing_eps(&self.to_eps(lambda), &root.eps))
    }

    /// `⟨λ, α_0^∨⟩`, via the precomputed coroot row.
    pub fn pair_alpha0(&self, lambda: Weight) -> i64 {
        let c = &self.roots[self.alpha0].coroot;
        lambda.coeffs().iter().zip(c.coeffs()).map(|(a, b)| a * b).sum()
    }

    /// Coordinates over the simple roots (rational in general).
    pub fn simple_coords(&self, lambda: Weight) -> Vec<Ratio<i64>> {
        apply_rational(&self.to_simple, lambda)
    }

    pub fn in_root_lattice(&self, lambda: Weight) -> bool {
        self.simple_coords(lambda).iter().all(|x| x.is_integer())
    }

    /// Dominant ν with `⟨ν, α_0^∨⟩ < bound`, lexicographically sorted.
    pub fn enumerate_dominant(&self, bound: i64) -> Vec<Weight> {
        let q: Vec<i64> = (1..=self.rank).map(|i| self.pair_alpha0(self.omega(i))).collect();
        assert!(q.iter().all(|&x| x >= 1));
        let mut out = Vec::new();
        let mut cur = vec![0i64; self.rank];
        fn rec(k: usize, budget: i64, q: &[i64], cur: &mut Vec<i64>, out: &mut Vec<Weight>) {
            if k == q.len() {
                out.push(Weight::new(cur));
                return;
            }
            let mut c = 0;
            while c * q[k] < budget {
                cur[k] = c;
                rec(k + 1, budget - c * q[k], q, cur, out);
                c += 1;
            }
            cur[k] = 0;
        }
        if bound > 0 {
            rec(0, bound, &q, &mut cur, &mut out);
        }
        out
    }

    /// `w·λ = w(λ+ρ) − ρ`.
    pub fn dot_action(&self, w: &WeylElement, lambda: Weight) -> Weight {
        w.apply(lambda + self.rho()) - self.rho()
    }

    pub fn longest_element(&self) -> &WeylElement {
        self.weyl.iter().max_by_key(|w| w.length).unwrap()
    }

    /// Positive roots of Φ_s that are not sums of two positive roots of Φ_s.
    pub fn computed_pi_s(&self) -> Vec<usize> {
        let pos: Vec<usize> = self.phi_s.iter().copied().filter(|&i| self.roots[i].positive).collect();
        pos.iter()
            .copied()
            .filter(|&g| {
                !pos.iter().any(|&a| {
                    let rest = self.roots[g].weight - self.roots[a].weight;
                    self.index.get(&rest).is_some_and(|&b| pos.contains(&b))
                })
            })
            .collect()
    }

    /// Dynkin type of the root system spanned by the given simple system.
    pub fn cartan_type(&self, simple: &[usize]) -> String {
        let vs: Vec<Eps> = simple.iter().map(|&i| self.roots[i].eps).collect();
        cartan_type_of(&vs)
    }

    pub fn full_cartan_type(&self) -> String {
        self.cartan_type(&self.simple)
    }

    pub fn short_cartan_type(&self) -> String {
        self.cartan_type(&self.pi_s)
    }
}

/// Classifies a simple system given by (doubled) ε-vectors.
pub fn cartan_type_of(vs: &[Eps]) -> String {
    let n = vs.len();
    let a = |i: usize, j: usize| pairing_eps(&vs[i], &vs[j]);
    let mut comp = vec![usize::MAX; n];
    let mut comps: Vec<Vec<usize>> = Vec::new();
    for start in 0..n {
        if comp[start] != usize::MAX {
            continue;
        }
        let c = comps.len();
        let mut stack = vec![start];
        comp[start] = c;
        let mut nodes = Vec::new();
        while let Some(x) = stack.pop() {
            nodes.push(x);
            for y in 0..n {
                if y != x && comp[y] == usize::MAX && a(x, y) != 0 {
                    comp[y] = c;
                    stack.push(y);
                }
            }
        }
        nodes.sort();
        comps.push(nodes);
    }
    let mut names: Vec<(char, usize)> = comps
        .iter()
        .map(|nodes| {
            let k = nodes.len();
            let bonds: Vec<i64> = nodes
                .iter()
                .flat_map(|&x| nodes.iter().filter(move |&&y| y > x).map(move |&y| a(x, y) * a(y, x)))
                .collect();
            let max_bond = bonds.iter().copied().max().unwrap_or(0);
            if k == 1 {
                return ('A', 1);
            }
            match max_bond {
                3 => ('G', 2),
                2 if k == 4 => ('F', 4),
                2 => {
                    let longest = nodes.iter().map(|&x| dot(&vs[x], &vs[x])).max().unwrap();
                    let long = nodes.iter().filter(|&&x| dot(&vs[x], &vs[x]) == longest).count();
                    if long * 2 > k {
                        ('B', k)
                    } else {
                        ('C', k)
                    }
                }
                _ => {
                    let deg: BTreeMap<usize, usize> = nodes
                        .iter()
                        .map(|&x| (x, nodes.iter().filter(|&&y| y != x && a(x, y) != 0).count()))
                        .collect();
                    match deg.iter().find(|(_, &d)| d == 3) {
                        None => ('A', k),
                        Some((&branch, _)) => {
                            let mut arms: Vec<usize> = nodes
                                .iter()
                                .filter(|&&y| y != branch && a(branch, y) != 0)
                                .map(|&y| {
                                    let (mut prev, mut cur, mut len) = (branch, y, 1);
                                    loop {
                                        let next = nodes
                                            .iter()
                                            .copied()
                                            .find(|&z| z != prev && z != cur && a(cur, z) != 0);
                                        match next {
                                            Some(z) => {
                                                prev = cur;
                                                cur = z;
                                                len += 1;
                                            }
                                            None => break len,
                                        }
                                    }
                                })
                                .collect();
                            arms.sort();
                            if arms[0] == 1 && arms[1] == 1 {
                                ('D', k)
                            } else {
                                ('E', k)
                            }
                        }
                    }
                }
            }
        })
        .collect();
    names.sort();
    names.iter().map(|(c, k)| format!("{c}{k}")).collect::<Vec<_>>().join("x")
}
