//! Independent linear-algebra/combinatorial model of the Schubert varieties
//! of the orthogonal Grassmannian `OG(2, C^m)`, used to cross-validate the
//! root-theoretic pipeline.
//!
//! The model is combinatorial first: horizontality and dimension are
//! predicates on the class parameters. The exact-rational layer re-derives
//! the non-horizontality verdicts from the tangency failure of explicit
//! curves `E(t)` inside the Schubert cells, evaluated at `t = 0, 1, 2`
//! (entries are quadratic in `t`, so three points decide identically-zero).
//!
//! Conventions: `nu(e_a, e_b) = 1` iff `a + b = m + 1`; the flag is
//! `F^p = span(e_1..e_p)`; for even `m = 2r` the second spinor family uses
//! `F~^r = span(e_1..e_{r-1}, e_{r+1})`.

use num_rational::Ratio;

use crate::error::{Error, Result};

type Q = Ratio<i64>;

/// One `G`-congruence class of Schubert varieties in `OG(2, C^m)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Kind {
    /// `X_{a,b}`: `dim(E n F^a) >= 1`, `E c F^b`.
    Plain { a: usize, b: usize },
    /// `X~_{a,r}`: `dim(E n F^a) >= 1`, `E c F~^r` (even `m` only).
    TildeAr { a: usize },
    /// `X~_{r,b}`: `dim(E n F~^r) >= 1`, `E c F^b` (even `m` only).
    TildeRb { b: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct IsotropicSchubert {
    pub m: usize,
    pub kind: Kind,
}

impl IsotropicSchubert {
    pub fn plain(m: usize, a: usize, b: usize) -> Result<Self> {
        check_m(m)?;
        let r = m / 2;
        if !(1 <= a && a < b && b <= m) {
            return Err(Error::InvalidClass(format!("need 1 <= a < b <= m, got ({a},{b})")));
        }
        if a + b == m + 1 {
            return Err(Error::InvalidClass(format!("a + b = m + 1 for ({a},{b})")));
        }
        if a == r + 1 || b == r + 1 {
            return Err(Error::InvalidClass(format!("a or b equals r + 1 for ({a},{b})")));
        }
        Ok(IsotropicSchubert { m, kind: Kind::Plain { a, b } })
    }

    pub fn tilde_ar(m: usize, a: usize) -> Result<Self> {
        check_m(m)?;
        let r = m / 2;
        if !m.is_multiple_of(2) {
            return Err(Error::InvalidClass("tilde classes need even m".into()));
        }
        if !(1 <= a && a < r) {
            return Err(Error::InvalidClass(format!("need a <= r - 1, got {a}")));
        }
        Ok(IsotropicSchubert { m, kind: Kind::TildeAr { a } })
    }

    pub fn tilde_rb(m: usize, b: usize) -> Result<Self> {
        check_m(m)?;
        let r = m / 2;
        if !m.is_multiple_of(2) {
            return Err(Error::InvalidClass("tilde classes need even m".into()));
        }
        if !(r + 2 <= b && b <= m) {
            return Err(Error::InvalidClass(format!("need r + 2 <= b <= m, got {b}")));
        }
        Ok(IsotropicSchubert { m, kind: Kind::TildeRb { b } })
    }

    pub fn r(&self) -> usize {
        self.m / 2
    }

    /// Horizontality: plain classes are horizontal iff `F^a c (F^b)^perp`,
    /// i.e. `a + b <= m`; every `X~_{a,r}` is horizontal and no `X~_{r,b}` is.
    pub fn is_horizontal(&self) -> bool {
        match self.kind {
            Kind::Plain { a, b } => a + b <= self.m,
            Kind::TildeAr { .. } => true,
            Kind::TildeRb { .. } => false,
        }
    }

    /// Dimension of the class, from the fibration over the isotropic lines of
    /// the first flag member: base + quadric-fiber dimension.
    pub fn dimension(&self) -> usize {
        let m = self.m;
        let r = self.r();
        match self.kind {
            Kind::Plain { a, b } => {
                if a + b <= m {
                    // Base P(F^a) is all isotropic; fiber is P(F^b / u),
                    // cut by a quadric once nu is nonzero on F^b.
                    (a - 1) + (b - 2) - usize::from(2 * b > m)
                } else {
                    // Generic u pairs nontrivially with F^b, dropping the
                    // fiber to F^b n u-perp; its quadric is always proper.
                    (a - 1) - usize::from(2 * a > m) + (b - 4)
                }
            }
            Kind::TildeAr { a } => (a - 1) + (r - 2),
            Kind::TildeRb { b } => (r - 1) + (b - 4),
        }
    }

    /// Containment `self <= other` of the corresponding Schubert varieties:
    /// inclusion of the defining flag conditions, with two even-`m`
    /// corrections where the larger class's incidence locus is reducible and
    /// the orbit closure misses the smaller class. Both corrections involve
    /// the two families of maximal isotropics: `X[r-1,r]` (which is
    /// `Gr(2, F^r)`) is not contained in `X[r, r+2]`, and symmetrically
    /// `X~[r-1,r]` is not contained in `X~[r, r+2]`; mixed-family versions do
    /// hold. Certified against the root-side Bruhat order.
    pub fn leq(&self, other: &IsotropicSchubert) -> bool {
        if self.m != other.m {
            return false;
        }
        let r = self.r();
        match (self.kind, other.kind) {
            (Kind::Plain { a, b }, Kind::Plain { a: a2, b: b2 }) => {
                a <= a2
                    && b <= b2
                    && !(self.m.is_multiple_of(2) && (a, b) == (r - 1, r) && (a2, b2) == (r, r + 2))
            }
            // F^b c F~^r iff b <= r - 1.
            (Kind::Plain { a, b }, Kind::TildeAr { a: a2 }) => a <= a2 && b < r,
            // E n F^a != 0 gives E n F~^r != 0 iff F^a c F~^r.
            (Kind::Plain { a, b }, Kind::TildeRb { b: b2 }) => a < r && b <= b2,
            // F~^r c F^{b2} iff b2 >= r + 1.
            (Kind::TildeAr { a }, Kind::Plain { a: a2, b: b2 }) => a <= a2 && b2 > r,
            (Kind::TildeAr { a }, Kind::TildeAr { a: a2 }) => a <= a2,
            // E c F~^r meets F~^r and sits inside every F^{b2 >= r+1}, but the
            // same-family parity obstruction removes the (r-1, r+2) case.
            (Kind::TildeAr { a }, Kind::TildeRb { b: b2 }) => !((a, b2) == (r - 1, r + 2)),
            (Kind::TildeRb { .. }, Kind::TildeAr { .. }) => false,
            // E n F~^r != 0 forces E n F^{a2} != 0 only via F~^r c F^{a2}.
            (Kind::TildeRb { b }, Kind::Plain { a: a2, b: b2 }) => a2 > r && b <= b2,
            (Kind::TildeRb { b }, Kind::TildeRb { b: b2 }) => b <= b2,
        }
    }

    pub fn label(&self) -> String {
        let r = self.r();
        match self.kind {
            Kind::Plain { a, b } => format!("X[{a},{b}]"),
            Kind::TildeAr { a } => format!("X~[{a},{r}]"),
            Kind::TildeRb { b } => format!("X~[{r},{b}]"),
        }
    }
}

fn check_m(m: usize) -> Result<()> {
    if m < 5 {
        Err(Error::AmbientTooSmall(m))
    } else {
        Ok(())
    }
}

/// All classes of `OG(2, C^m)`, ordered.
pub fn enumerate_og2(m: usize) -> Result<Vec<IsotropicSchubert>> {
    check_m(m)?;
    let r = m / 2;
    let mut out = Vec::new();
    for a in 1..=m {
        for b in (a + 1)..=m {
            if a + b != m + 1 && a != r + 1 && b != r + 1 {
                out.push(IsotropicSchubert { m, kind: Kind::Plain { a, b } });
            }
        }
    }
    if m.is_multiple_of(2) {
        for a in 1..=(r - 1) {
            out.push(IsotropicSchubert { m, kind: Kind::TildeAr { a } });
        }
        for b in (r + 2)..=m {
            out.push(IsotropicSchubert { m, kind: Kind::TildeRb { b } });
        }
    }
    out.sort();
    Ok(out)
}

/// Maximal horizontal classes under containment.
pub fn maximal_hsv_og2(m: usize) -> Result<Vec<IsotropicSchubert>> {
    let horizontal: Vec<IsotropicSchubert> = enumerate_og2(m)?
        .into_iter()
        .filter(|x| x.is_horizontal())
        .collect();
    Ok(horizontal
        .iter()
        .filter(|x| !horizontal.iter().any(|y| y != *x && x.leq(y)))
        .copied()
        .collect())
}

/// Dense matrix over exact rationals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Q>,
}

impl RationalMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        RationalMatrix { rows, cols, data: vec![Q::from_integer(0); rows * cols] }
    }

    /// The symmetric form `nu(e_a, e_b) = delta(a + b, m + 1)` on `C^m`.
    pub fn nu_form(m: usize) -> Self {
        let mut out = Self::zero(m, m);
        for a in 1..=m {
            out.set(a - 1, m + 1 - a - 1, Q::from_integer(1));
        }
        out
    }

    pub fn get(&self, i: usize, j: usize) -> Q {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Q) {
        self.data[i * self.cols + j] = v;
    }

    /// Bilinear evaluation `u^T M v`.
    pub fn pair(&self, u: &[Q], v: &[Q]) -> Q {
        let mut acc = Q::from_integer(0);
        for (i, &ui) in u.iter().enumerate().take(self.rows) {
            if ui != Q::from_integer(0) {
                for (j, &vj) in v.iter().enumerate().take(self.cols) {
                    acc += ui * self.get(i, j) * vj;
                }
            }
        }
        acc
    }
}

/// Standard basis vector `e_k` (1-based) of `C^m`, as rationals.
pub fn basis_vector(m: usize, k: usize) -> Vec<Q> {
    let mut v = vec![Q::from_integer(0); m];
    v[k - 1] = Q::from_integer(1);
    v
}

fn scaled(v: &[Q], c: Q) -> Vec<Q> {
    v.iter().map(|&x| x * c).collect()
}

fn added(u: &[Q], v: &[Q]) -> Vec<Q> {
    u.iter().zip(v).map(|(&a, &b)| a + b).collect()
}

/// Verify, in exact arithmetic, that the curve `E(t)` of a non-horizontal
/// class violates the tangency condition: `E(t)` is isotropic and lies in the
/// class's locus for `t = 0, 1, 2`, while at `t = 1` the derivative span is
/// not `nu`-orthogonal to `E(t)`. Returns `true` when the violation is
/// confirmed.
pub fn curve_violation_check(x: &IsotropicSchubert) -> Result<bool> {
    if x.is_horizontal() {
        return Err(Error::HorizontalClass);
    }
    let m = x.m;
    let r = x.r();
    let nu = RationalMatrix::nu_form(m);

    // Curve generators: v1(t) = base1 + t dir1, v2(t) = base2 - t dir2.
    type Membership = Box<dyn Fn(&[Q], &[Q]) -> bool>;
    let (base1, dir1, base2, dir2, membership): (_, _, _, _, Membership) =
        match x.kind {
            Kind::Plain { a, b } => (
                basis_vector(m, b),
                basis_vector(m, m + 1 - a),
                basis_vector(m, a),
                basis_vector(m, m + 1 - b),
                Box::new(move |v1: &[Q], v2: &[Q]| {
                    in_span_flag(v2, a) && in_span_flag(v1, b) && in_span_flag(v2, b)
                }),
            ),
            Kind::TildeRb { b } => (
                basis_vector(m, b),
                basis_vector(m, r),
                basis_vector(m, r + 1),
                basis_vector(m, m + 1 - b),
                Box::new(move |v1: &[Q], v2: &[Q]| {
                    in_tilde_flag(v2, r) && in_span_flag(v1, b) && in_span_flag(v2, b)
                }),
            ),
            Kind::TildeAr { .. } => unreachable!("tilde_ar is horizontal"),
        };

    for t in 0..=2i64 {
        let tq = Q::from_integer(t);
        let v1 = added(&base1, &scaled(&dir1, tq));
        let v2 = added(&base2, &scaled(&dir2, -tq));
        // nu restricted to E(t) vanishes (three points kill a quadratic).
        if nu.pair(&v1, &v1) != Q::from_integer(0)
            || nu.pair(&v1, &v2) != Q::from_integer(0)
            || nu.pair(&v2, &v2) != Q::from_integer(0)
        {
            return Ok(false);
        }
        // E(t) is a 2-plane in the locus.
        if !membership(&v1, &v2) || !independent(&v1, &v2) {
            return Ok(false);
        }
    }

    // Derivative span at t = 1: {dir1, -dir2}; tangency would need it to be
    // nu-orthogonal to E(1).
    let one = Q::from_integer(1);
    let v1 = added(&base1, &scaled(&dir1, one));
    let v2 = added(&base2, &scaled(&dir2, -one));
    let violated = [dir1, scaled(&dir2, -one)].iter().any(|d| {
        nu.pair(&v1, d) != Q::from_integer(0) || nu.pair(&v2, d) != Q::from_integer(0)
    });
    Ok(violated)
}

/// Membership in `F^p = span(e_1..e_p)`.
fn in_span_flag(v: &[Q], p: usize) -> bool {
    v.iter().skip(p).all(|&c| c == Q::from_integer(0))
}

/// Membership in `F~^r = span(e_1..e_{r-1}, e_{r+1})`.
fn in_tilde_flag(v: &[Q], r: usize) -> bool {
    v.iter()
        .enumerate()
        .all(|(i, &c)| c == Q::from_integer(0) || i < r - 1 || i + 1 == r + 1)
}

fn independent(u: &[Q], v: &[Q]) -> bool {
    for i in 0..u.len() {
        for j in (i + 1)..u.len() {
            if u[i] * v[j] - u[j] * v[i] != Q::from_integer(0) {
                return true;
            }
        }
    }
    false
}
