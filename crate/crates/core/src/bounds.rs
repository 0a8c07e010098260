//! Closed-form bounds on `R(n; r, s)`, evaluated exactly.
//!
//! Every value is an integer: upper bounds are rounded up, lower bounds down. Real
//! exponents are handled by comparing integer powers, never by floating point.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;

use num_bigint::BigUint;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::codes::gv_lower_bound;
use crate::combin::{binomial_big, factorial_big};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Direction {
    Lower,
    Upper,
}

/// How the exact value of the formula was turned into an integer.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Rounding {
    Exact,
    Floor,
    Ceil,
}

/// One evaluated bound. A lower report with value `L` claims `R >= L`; an upper report
/// with value `U` claims `R <= U`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundReport {
    pub name: String,
    pub direction: Direction,
    pub params: BTreeMap<String, u64>,
    pub value: BigUint,
    pub rounding: Rounding,
    pub provenance: String,
}

impl BoundReport {
    fn new(
        name: &str,
        direction: Direction,
        params: &[(&str, u64)],
        value: BigUint,
        rounding: Rounding,
        provenance: &str,
    ) -> Self {
        BoundReport {
            name: name.into(),
            direction,
            params: params.iter().map(|&(k, v)| (k.into(), v)).collect(),
            value,
            rounding,
            provenance: provenance.into(),
        }
    }

    pub fn param(&self, key: &str) -> Option<u64> {
        self.params.get(key).copied()
    }
}

fn big(x: u64) -> BigUint {
    BigUint::from(x)
}

fn ratio(num: u64, den: u64) -> BigRational {
    BigRational::new(num.into(), den.into())
}

fn ceil_to_uint(x: &BigRational) -> BigUint {
    x.ceil().to_integer().to_biguint().unwrap_or_default()
}

fn check_rs(r: u64, s: u64, strict: bool) -> Result<()> {
    if s == 0 || s > r || (strict && s == r) {
        let need = if strict { "r > s >= 1" } else { "r >= s >= 1" };
        return Err(Error::Precondition(format!(
            "need {need}, got r={r}, s={s}"
        )));
    }
    Ok(())
}

/// `ceil((r/(r-s)) (r/s)^((n-2)r+1))`.
pub fn simple_upper(n: u64, r: u64, s: u64) -> Result<BoundReport> {
    check_rs(r, s, true)?;
    if n < 3 {
        return Err(Error::Precondition(format!("need n >= 3, got {n}")));
    }
    let exponent = ((n - 2) * r + 1) as usize;
    let value = ratio(r, r - s) * num_traits::pow(ratio(r, s), exponent);
    Ok(BoundReport::new(
        "simple_upper",
        Direction::Upper,
        &[("n", n), ("r", r), ("s", s)],
        ceil_to_uint(&value),
        Rounding::Ceil,
        "density increment over colors",
    ))
}

/// `(r/(r-s))^E` with `E = ceil(500 n (r-s)^2 / r)`, rounded up, for `10s > 9r`.
/// The exponent is rounded up before exponentiation, which only weakens the bound.
pub fn upper_s_large(n: u64, r: u64, s: u64) -> Result<BoundReport> {
    check_rs(r, s, true)?;
    if 10 * s <= 9 * r {
        return Err(Error::Precondition(format!(
            "need s > 9r/10, got r={r}, s={s}"
        )));
    }
    let gap = (r - s) as u128;
    let exponent = (500 * n as u128 * gap * gap).div_ceil(r as u128);
    let exponent =
        usize::try_from(exponent).map_err(|_| Error::Precondition("exponent too large".into()))?;
    let value = num_traits::pow(ratio(r, r - s), exponent);
    Ok(BoundReport::new(
        "upper_s_large",
        Direction::Upper,
        &[("n", n), ("r", r), ("s", s), ("exponent", exponent as u64)],
        ceil_to_uint(&value),
        Rounding::Ceil,
        "on/off color process",
    ))
}

/// `floor((a/b)^((n-1)/2) (n!/a)^(1/n))`, valid for `b >= a/2` and `n! >= a`.
///
/// `F` is at most the real value exactly when
/// `F^(2n) b^(n(n-1)) a^2 <= a^(n(n-1)) (n!)^2`, which is decided in integers.
/// The result is clamped to at least 1.
pub fn first_moment_lower(n: u64, a: u64, b: u64) -> Result<BoundReport> {
    check_rs(a, b, false)?;
    if n < 2 || 2 * b < a {
        return Err(Error::Precondition(format!(
            "need n >= 2 and b >= a/2, got n={n}, a={a}, b={b}"
        )));
    }
    let fact = factorial_big(n);
    if fact < big(a) {
        return Err(Error::Precondition(format!(
            "need n! >= a, got n={n}, a={a}"
        )));
    }
    let e = (n * (n - 1)) as usize;
    let rhs = num_traits::pow(big(a), e) * &fact * &fact;
    let coef = num_traits::pow(big(b), e) * big(a) * big(a);
    let fits = |f: &BigUint| num_traits::pow(f.clone(), 2 * n as usize) * &coef <= rhs;
    // the value is at most a * n!, which bounds the search
    let (mut lo, mut hi) = (BigUint::zero(), big(a) * &fact + 1u32);
    while &lo + 1u32 < hi {
        let mid: BigUint = (&lo + &hi) >> 1;
        if fits(&mid) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(BoundReport::new(
        "first_moment_lower",
        Direction::Lower,
        &[("n", n), ("r", a), ("s", b)],
        lo.max(BigUint::one()),
        Rounding::Floor,
        "first moment over random colorings",
    ))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Regime {
    /// `(r-s)^2 < 64 r`: use the first-moment bound on `(r, s)` directly.
    Direct,
    /// Combine a coloring for `(a, b)` with a code of length `m` and distance `d`.
    ProductOfCodes,
}

/// Parameters of the code product used when `s` is not close to `r`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProductPlan {
    pub a: u64,
    pub b: u64,
    pub r_prime: u64,
    pub s_prime: u64,
    pub m: u64,
    pub d: u64,
    /// `r'/a - s'/b`.
    pub exponent: BigRational,
    /// `(r-s)^2 / (64 r)`.
    pub target: BigRational,
}

impl ProductPlan {
    pub fn meets_target(&self) -> bool {
        self.exponent >= self.target
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LowerBoundPlan {
    pub n: u64,
    pub r: u64,
    pub s: u64,
    pub regime: Regime,
    pub product: Option<ProductPlan>,
}

/// Chooses between the direct first-moment bound and the code product.
///
/// In the product regime `a = floor(16r/(r-s))`, `b = a-1`, `r'` is the largest multiple
/// of `a` that is at most `r`, `s'` the smallest multiple of `b` that is at least `s`,
/// `m = r'/a` and `d = s'/b`.
pub fn lower_bound_plan(n: u64, r: u64, s: u64) -> Result<LowerBoundPlan> {
    check_rs(r, s, true)?;
    let gap = r - s;
    let direct = (gap as u128) * (gap as u128) < 64 * r as u128;
    let product = (!direct).then(|| {
        let a = 16 * r / gap;
        let b = a - 1;
        let r_prime = r / a * a;
        let s_prime = s.div_ceil(b) * b;
        ProductPlan {
            a,
            b,
            r_prime,
            s_prime,
            m: r_prime / a,
            d: s_prime / b,
            exponent: ratio(r_prime, a) - ratio(s_prime, b),
            target: ratio(gap * gap, 64 * r),
        }
    });
    Ok(LowerBoundPlan {
        n,
        r,
        s,
        regime: if direct {
            Regime::Direct
        } else {
            Regime::ProductOfCodes
        },
        product,
    })
}

/// `R(n; r, s) >= n` always holds: no `K_n` fits in `n - 1` vertices.
fn base_lower(n: u64, r: u64, s: u64) -> BigUint {
    first_moment_lower(n, r, s)
        .map(|rep| rep.value)
        .unwrap_or_default()
        .max(big(n))
}

/// The lower bound the plan certifies.
///
/// Direct regime: the larger of `n` and the first-moment bound (when its preconditions
/// hold). Product regime: with `q = L - 1`, where `L` is the same kind of bound for
/// `(n; a, b)`, a `q`-ary code of length `m` and distance `d` gives
/// `R(n; r, s) > gv(q, m, d)`.
pub fn plan_lower(n: u64, r: u64, s: u64) -> Result<BoundReport> {
    let plan = lower_bound_plan(n, r, s)?;
    let params = [("n", n), ("r", r), ("s", s)];
    let value = match &plan.product {
        None => base_lower(n, r, s),
        Some(p) => {
            let q = base_lower(n, p.a, p.b) - 1u32;
            let from_codes = match q.to_u64() {
                Some(q) if q >= 2 && p.d <= p.m && p.d >= 1 => gv_lower_bound(q, p.m, p.d) + 1u32,
                _ => BigUint::zero(),
            };
            from_codes.max(big(n))
        }
    };
    Ok(BoundReport::new(
        "plan_lower",
        Direction::Lower,
        &params,
        value,
        Rounding::Floor,
        "code product over a first-moment base",
    ))
}

/// `ex(N, K_n)`: edges of the balanced complete `(n-1)`-partite graph on `N` vertices.
pub fn turan_number(num_vertices: u64, n: u64) -> Result<BigUint> {
    if n < 2 {
        return Err(Error::Precondition(format!("need n >= 2, got {n}")));
    }
    let parts = n - 1;
    let (q, rem) = num_vertices.div_rem(&parts);
    let inside = binomial_big(q + 1, 2) * big(rem) + binomial_big(q, 2) * big(parts - rem);
    Ok(binomial_big(num_vertices, 2) - inside)
}

/// Default number of vertex counts tried by [`turan_upper`].
pub const TURAN_SCAN_LIMIT: u64 = 100_000;

/// Least `N >= n` with `s C(N,2) > r ex(N, K_n)`, so that some color class has more
/// edges than any `K_n`-free graph. `None` if no such `N` is below `n + scan_limit`.
pub fn turan_upper(n: u64, r: u64, s: u64, scan_limit: u64) -> Result<Option<BoundReport>> {
    check_rs(r, s, false)?;
    turan_number(n, n)?;
    for num_vertices in n..n.saturating_add(scan_limit) {
        let lhs = big(s) * binomial_big(num_vertices, 2);
        if lhs > big(r) * turan_number(num_vertices, n)? {
            return Ok(Some(BoundReport::new(
                "turan_upper",
                Direction::Upper,
                &[("n", n), ("r", r), ("s", s)],
                big(num_vertices),
                Rounding::Exact,
                "Turán double counting",
            )));
        }
    }
    Ok(None)
}

/// `Some(n)` when `(r-s) C(n,2) < r`: then some color lies on every edge of `K_n`.
pub fn trivial_value(n: u64, r: u64, s: u64) -> Option<u64> {
    let pairs = binomial_big(n, 2);
    (s <= r && big(r - s) * pairs < big(r)).then_some(n)
}

/// Combines lower bounds for `(n; r1, 1)` and `(n; r2, 1)` into one for `(n; r1+r2, 1)`
/// via `R(n; r1+r2) - 1 >= (R(n; r1) - 1)(R(n; r2) - 1)`.
pub fn lefmann_product(lb1: &BoundReport, lb2: &BoundReport) -> Result<BoundReport> {
    let fields = |rep: &BoundReport| -> Result<(u64, u64)> {
        if rep.direction != Direction::Lower {
            return Err(Error::Precondition(format!(
                "{} is not a lower bound",
                rep.name
            )));
        }
        match (rep.param("n"), rep.param("r"), rep.param("s")) {
            (Some(n), Some(r), Some(1)) => Ok((n, r)),
            _ => Err(Error::Precondition(format!(
                "{} must be a lower bound with parameters n, r and s = 1",
                rep.name
            ))),
        }
    };
    let (n1, r1) = fields(lb1)?;
    let (n2, r2) = fields(lb2)?;
    if n1 != n2 {
        return Err(Error::Precondition(format!(
            "clique sizes differ: {n1} vs {n2}"
        )));
    }
    if lb1.value.is_zero() || lb2.value.is_zero() {
        return Err(Error::Precondition(
            "lower bounds must be at least 1".into(),
        ));
    }
    let value = (&lb1.value - 1u32) * (&lb2.value - 1u32) + 1u32;
    Ok(BoundReport::new(
        "lefmann_product",
        Direction::Lower,
        &[("n", n1), ("r", r1 + r2), ("s", 1)],
        value,
        Rounding::Exact,
        "product of colorings",
    ))
}

/// `C(r,s)^C(base_value, k-1)`, either materialized or left as a power.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HypergraphUpper {
    Value(BoundReport),
    Power { base: BigUint, exponent: BigUint },
}

/// Default cap on the number of decimal digits [`hypergraph_upper`] materializes.
pub const DEFAULT_DIGIT_BUDGET: u64 = 100_000;

/// Upper bound on `R_k(n; r, s)` from a caller-supplied upper bound `base_value` on
/// `R_{k-1}(n-1; r, s)`.
pub fn hypergraph_upper(
    n: u64,
    k: u64,
    r: u64,
    s: u64,
    base_value: u64,
    digit_budget: u64,
) -> Result<HypergraphUpper> {
    check_rs(r, s, false)?;
    if k < 3 || base_value < k - 1 {
        return Err(Error::Precondition(format!(
            "need k >= 3 and base_value >= k-1, got k={k}, base_value={base_value}"
        )));
    }
    let base = binomial_big(r, s);
    let exponent = binomial_big(base_value, k - 1);
    // decimal digits of base^exponent are below exponent * bits(base) * log10(2) + 1
    let digits = &exponent * base.bits() * 30103u32 / 100_000u32 + 1u32;
    if digits > big(digit_budget) {
        return Ok(HypergraphUpper::Power { base, exponent });
    }
    let e = exponent.to_usize().expect("exponent within digit budget");
    Ok(HypergraphUpper::Value(BoundReport::new(
        "hypergraph_upper",
        Direction::Upper,
        &[
            ("n", n),
            ("k", k),
            ("r", r),
            ("s", s),
            ("base_value", base_value),
        ],
        num_traits::pow(base, e),
        Rounding::Exact,
        "induction on uniformity",
    )))
}

/// Every graph upper bound whose preconditions hold at `(n, r, s)`.
pub fn upper_bounds(n: u64, r: u64, s: u64) -> alloc::vec::Vec<BoundReport> {
    let mut out = alloc::vec::Vec::new();
    if let Some(v) = trivial_value(n, r, s) {
        out.push(BoundReport::new(
            "trivial_value",
            Direction::Upper,
            &[("n", n), ("r", r), ("s", s)],
            big(v),
            Rounding::Exact,
            "pigeonhole on a single clique",
        ));
    }
    out.extend(simple_upper(n, r, s).ok());
    out.extend(upper_s_large(n, r, s).ok());
    out.extend(turan_upper(n, r, s, TURAN_SCAN_LIMIT).ok().flatten());
    out
}

/// Smallest applicable graph upper bound.
pub fn best_upper(n: u64, r: u64, s: u64) -> Option<BoundReport> {
    upper_bounds(n, r, s)
        .into_iter()
        .min_by(|x, y| x.value.cmp(&y.value))
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn val(rep: &BoundReport) -> String {
        rep.value.to_string()
    }

    #[test]
    fn simple_upper_examples() {
        assert_eq!(val(&simple_upper(3, 2, 1).unwrap()), "16");
        assert_eq!(val(&simple_upper(3, 4, 3).unwrap()), "17");
        assert!(simple_upper(3, 2, 2).is_err());
        assert!(simple_upper(2, 3, 1).is_err());
    }

    #[test]
    fn upper_s_large_examples() {
        let rep = upper_s_large(3, 20, 19).unwrap();
        assert_eq!(rep.value, num_traits::pow(BigUint::from(20u32), 75));
        assert_eq!(rep.param("exponent"), Some(75));
        assert!(upper_s_large(3, 10, 9).is_err());
        assert!(upper_s_large(4, 20, 19).unwrap().value > rep.value);
    }

    #[test]
    fn first_moment_examples() {
        assert_eq!(val(&first_moment_lower(3, 2, 1).unwrap()), "2");
        // a = b: floor((n!/a)^(1/n)); (5!/1)^(1/5) = 2.6
        assert_eq!(val(&first_moment_lower(5, 1, 1).unwrap()), "2");
        assert_eq!(val(&first_moment_lower(4, 2, 1).unwrap()), "5");
        assert!(first_moment_lower(3, 3, 1).is_err());
        assert!(first_moment_lower(3, 7, 6).is_err());
    }

    #[test]
    fn plan_examples() {
        let plan = lower_bound_plan(3, 100, 20).unwrap();
        assert_eq!(plan.regime, Regime::ProductOfCodes);
        let p = plan.product.unwrap();
        assert_eq!(
            (p.a, p.b, p.r_prime, p.s_prime, p.m, p.d),
            (20, 19, 100, 38, 5, 2)
        );
        assert!(p.meets_target());
        assert_eq!(lower_bound_plan(3, 10, 9).unwrap().regime, Regime::Direct);
        assert_eq!(lower_bound_plan(3, 100, 21).unwrap().regime, Regime::Direct);
        assert_eq!(
            lower_bound_plan(3, 100, 19).unwrap().regime,
            Regime::ProductOfCodes
        );
    }

    #[test]
    fn turan_examples() {
        assert_eq!(turan_number(10, 4).unwrap(), BigUint::from(33u32));
        assert_eq!(turan_number(9, 5).unwrap(), BigUint::from(30u32));
        assert_eq!(turan_number(7, 2).unwrap(), BigUint::zero());
        let u = |n, r, s| turan_upper(n, r, s, 1000).unwrap().map(|rep| val(&rep));
        assert_eq!(u(4, 4, 3).as_deref(), Some("10"));
        assert_eq!(u(3, 3, 2).as_deref(), Some("5"));
        assert_eq!(u(5, 7, 6).as_deref(), Some("9"));
        assert_eq!(u(3, 2, 1), None);
    }

    #[test]
    fn trivial_examples() {
        assert_eq!(trivial_value(3, 4, 3), Some(3));
        assert_eq!(trivial_value(3, 3, 2), None);
        assert_eq!(trivial_value(4, 7, 6), Some(4));
        assert_eq!(trivial_value(4, 6, 5), None);
    }

    #[test]
    fn lefmann_examples() {
        let r33 = BoundReport::new(
            "x",
            Direction::Lower,
            &[("n", 3), ("r", 1), ("s", 1)],
            big(3),
            Rounding::Exact,
            "",
        );
        let five = lefmann_product(&r33, &r33).unwrap();
        assert_eq!((val(&five), five.param("r")), ("5".into(), Some(2)));
        let mut six = r33.clone();
        six.value = big(6);
        six.params.insert("r".into(), 2);
        assert_eq!(val(&lefmann_product(&six, &six).unwrap()), "26");
        let mut upper = six.clone();
        upper.direction = Direction::Upper;
        assert!(lefmann_product(&six, &upper).is_err());
    }

    #[test]
    fn hypergraph_examples() {
        let value = |r, s, b| match hypergraph_upper(4, 3, r, s, b, DEFAULT_DIGIT_BUDGET).unwrap() {
            HypergraphUpper::Value(rep) => val(&rep),
            HypergraphUpper::Power { .. } => panic!("materialized expected"),
        };
        assert_eq!(value(3, 2, 5), "59049");
        assert_eq!(value(2, 1, 6), "32768");
        assert_eq!(value(5, 2, 2), "10");
        assert!(matches!(
            hypergraph_upper(4, 3, 2, 1, 100_000, 1000).unwrap(),
            HypergraphUpper::Power { .. }
        ));
    }
}
