//! Fibonacci polynomials `F_n`, Chebyshev polynomials `T_n` and `U_n`, the
//! Fibonacci numbers, and derivative values at `x = 1`.
//!
//! Each family has two independent constructions: the three-term recurrence
//! (cached, used everywhere else in the crate) and the explicit binomial power
//! form (used only as a cross-check).

use std::sync::{OnceLock, RwLock};

use num_traits::{One, Zero};

use crate::poly::Polynomial;
use crate::scalar::{binom_q, int, pow2, ratio, sign};
use crate::{Error, Integer, Rational, RationalPoly, Result, Scalar};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SequenceKind {
    FibonacciPoly,
    ChebyshevT,
    ChebyshevU,
}

impl SequenceKind {
    pub const ALL: [SequenceKind; 3] = [Self::FibonacciPoly, Self::ChebyshevT, Self::ChebyshevU];

    pub fn symbol(self) -> &'static str {
        match self {
            Self::FibonacciPoly => "F",
            Self::ChebyshevT => "T",
            Self::ChebyshevU => "U",
        }
    }

    /// Index of the family member with the given degree (`F_{d+1}`, `T_d`, `U_d`).
    pub fn index_of_degree(self, degree: usize) -> usize {
        match self {
            Self::FibonacciPoly => degree + 1,
            Self::ChebyshevT | Self::ChebyshevU => degree,
        }
    }

    /// Degree of the member with the given index; `None` for `F_0 = 0`.
    pub fn degree_of_index(self, index: usize) -> Option<usize> {
        match self {
            Self::FibonacciPoly => index.checked_sub(1),
            Self::ChebyshevT | Self::ChebyshevU => Some(index),
        }
    }

    /// Cached exact member with the given index.
    pub fn polynomial(self, index: usize) -> RationalPoly {
        cached(self, index)
    }

    /// Members `0..len` over any scalar ring, by recurrence.
    pub fn sequence<T: Scalar>(self, len: usize) -> Vec<Polynomial<T>> {
        let mut v = Vec::with_capacity(len.max(2));
        extend(self, &mut v, len);
        v.truncate(len);
        v
    }

    /// Member built from the explicit binomial sum.
    pub fn power_form(self, index: usize) -> RationalPoly {
        match self {
            Self::FibonacciPoly => fibonacci_poly_powerform(index),
            Self::ChebyshevT => chebyshev_t_powerform(index),
            Self::ChebyshevU => chebyshev_u_powerform(index),
        }
    }
}

/// `c_0 = 2`, `c_n = 1` for `n > 0`.
pub fn c_normalizer(n: usize) -> Rational {
    if n == 0 {
        int(2)
    } else {
        Rational::one()
    }
}

fn extend<T: Scalar>(kind: SequenceKind, v: &mut Vec<Polynomial<T>>, len: usize) {
    if v.is_empty() {
        let (p0, p1) = match kind {
            SequenceKind::FibonacciPoly => (Polynomial::zero(), Polynomial::one()),
            SequenceKind::ChebyshevT => (Polynomial::one(), Polynomial::x()),
            SequenceKind::ChebyshevU => (Polynomial::one(), Polynomial::monomial(T::from_int(2), 1)),
        };
        v.push(p0);
        v.push(p1);
    }
    let x = Polynomial::<T>::x();
    let two_x = Polynomial::monomial(T::from_int(2), 1);
    while v.len() < len {
        let n = v.len();
        let next = match kind {
            SequenceKind::FibonacciPoly => &(&x * &v[n - 1]) + &v[n - 2],
            SequenceKind::ChebyshevT | SequenceKind::ChebyshevU => &(&two_x * &v[n - 1]) - &v[n - 2],
        };
        v.push(next);
    }
}

type Table = RwLock<Vec<RationalPoly>>;

fn table(kind: SequenceKind) -> &'static Table {
    static TABLES: OnceLock<[Table; 3]> = OnceLock::new();
    let tables = TABLES.get_or_init(Default::default);
    &tables[kind as usize]
}

fn cached(kind: SequenceKind, index: usize) -> RationalPoly {
    let lock = table(kind);
    {
        let read = lock.read().expect("sequence cache poisoned");
        if let Some(p) = read.get(index) {
            return p.clone();
        }
    }
    let mut write = lock.write().expect("sequence cache poisoned");
    extend(kind, &mut write, index + 1);
    write[index].clone()
}

/// `F_n(x)` with `F_0 = 0`, `F_1 = 1`, `F_{n+2} = x F_{n+1} + F_n`.
pub fn fibonacci_poly(n: usize) -> RationalPoly {
    cached(SequenceKind::FibonacciPoly, n)
}

pub fn chebyshev_t(n: usize) -> RationalPoly {
    cached(SequenceKind::ChebyshevT, n)
}

pub fn chebyshev_u(n: usize) -> RationalPoly {
    cached(SequenceKind::ChebyshevU, n)
}

/// `F_n(x) = sum_{r=0}^{floor((n-1)/2)} C(n-r-1, r) x^(n-2r-1)`.
pub fn fibonacci_poly_powerform(n: usize) -> RationalPoly {
    if n == 0 {
        return RationalPoly::zero();
    }
    let n = n as i64;
    let mut c = vec![Rational::zero(); n as usize];
    for r in 0..=(n - 1) / 2 {
        c[(n - 2 * r - 1) as usize] = binom_q(n - r - 1, r).expect("nonnegative");
    }
    RationalPoly::new(c)
}

/// `T_n(x) = (n/2) sum_r (-1)^r/(n-r) C(n-r, r) (2x)^(n-2r)`, with `T_0 = 1`.
pub fn chebyshev_t_powerform(n: usize) -> RationalPoly {
    if n == 0 {
        return RationalPoly::one();
    }
    let n = n as i64;
    let mut c = vec![Rational::zero(); n as usize + 1];
    for r in 0..=n / 2 {
        let e = n - 2 * r;
        c[e as usize] = ratio(n, 2) * sign(r) / int(n - r) * binom_q(n - r, r).expect("nonnegative") * pow2(e);
    }
    RationalPoly::new(c)
}

/// `U_n(x) = sum_r (-1)^r C(n-r, r) (2x)^(n-2r)`.
pub fn chebyshev_u_powerform(n: usize) -> RationalPoly {
    let n = n as i64;
    let mut c = vec![Rational::zero(); n as usize + 1];
    for r in 0..=n / 2 {
        let e = n - 2 * r;
        c[e as usize] = sign(r) * binom_q(n - r, r).expect("nonnegative") * pow2(e);
    }
    RationalPoly::new(c)
}

/// `F_n = F_n(1)` by the integer recurrence.
pub fn fibonacci_number(n: usize) -> Integer {
    let (mut a, mut b) = (Integer::zero(), Integer::one());
    for _ in 0..n {
        let next = &a + &b;
        a = std::mem::replace(&mut b, next);
    }
    a
}

/// `F^(q)_n = D^q F_n(x)` at `x = 1`.
pub fn fib_deriv_value(q: usize, n: usize) -> Rational {
    fibonacci_poly(n).derivative(q).eval(&Rational::one())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ChebyshevKind {
    T,
    U,
}

impl ChebyshevKind {
    pub fn sequence_kind(self) -> SequenceKind {
        match self {
            Self::T => SequenceKind::ChebyshevT,
            Self::U => SequenceKind::ChebyshevU,
        }
    }
}

/// Closed form of `D^q T_n(1)` or `D^q U_n(1)` for `q >= 1`:
///
/// ```text
/// D^q T_n(1) = prod_{i<q} (n-i)(n+i)/(2i+1)
/// D^q U_n(1) = (n+1) prod_{i<q} (n-i)(n+i+2)/(2i+3)
/// ```
pub fn cheb_deriv_at1(kind: ChebyshevKind, q: usize, n: usize) -> Result<Rational> {
    if q == 0 {
        return Err(Error::OutOfRange { name: "q", value: 0, min: 1 });
    }
    let n = n as i64;
    let value = (0..q as i64).fold(Rational::one(), |acc, i| match kind {
        ChebyshevKind::T => acc * int((n - i) * (n + i)) / int(2 * i + 1),
        ChebyshevKind::U => acc * int((n - i) * (n + i + 2)) / int(2 * i + 3),
    });
    Ok(match kind {
        ChebyshevKind::T => value,
        ChebyshevKind::U => value * int(n + 1),
    })
}
