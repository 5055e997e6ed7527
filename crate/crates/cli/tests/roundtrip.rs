use num_bigint::BigInt;
use proptest::prelude::*;

use nogo_cli::expr::{parse, Expr, Symbol};
use nogo_core::exactnum::Rational;

fn leaf() -> impl Strategy<Value = Expr> {
    prop_oneof![
        (0i64..=20, 1i64..=6).prop_map(|(n, d)| Expr::Num(Rational::new(BigInt::from(n), BigInt::from(d)))),
        Just(Expr::I),
        prop::sample::select(vec![Symbol::S1, Symbol::S2, Symbol::S3, Symbol::S, Symbol::Pi, Symbol::A, Symbol::C])
            .prop_map(Expr::Sym),
        (0u32..=4).prop_flat_map(|l| (Just(l), -(l as i64)..=l as i64)).prop_map(|(l, m)| Expr::Y(l, m)),
    ]
}

fn expr() -> impl Strategy<Value = Expr> {
    leaf().prop_recursive(5, 48, 2, |inner| {
        let b = |e: Expr| Box::new(e);
        prop_oneof![
            inner.clone().prop_map(move |e| Expr::Neg(b(e))),
            (inner.clone(), inner.clone()).prop_map(move |(x, y)| Expr::Add(b(x), b(y))),
            (inner.clone(), inner.clone()).prop_map(move |(x, y)| Expr::Sub(b(x), b(y))),
            (inner.clone(), inner.clone()).prop_map(move |(x, y)| Expr::Mul(b(x), b(y))),
            (inner.clone(), 0u32..=5).prop_map(move |(x, n)| Expr::Pow(b(x), n)),
            inner.clone().prop_map(move |e| Expr::Sqrt(b(e))),
            (inner.clone(), inner).prop_map(move |(x, y)| Expr::Pb(b(x), b(y))),
        ]
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn print_then_parse_is_identity(e in expr()) {
        let printed = e.to_string();
        prop_assert_eq!(parse(&printed), Ok(e), "printed as {}", printed);
    }
}
