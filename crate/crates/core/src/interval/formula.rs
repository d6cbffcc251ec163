use crate::coxeter::group_order_formula;
use crate::types::CoxeterType;

fn binomial(n: u64, k: u64) -> u128 {
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

/// Number of dual simple elements (non-crossing partitions).
pub fn ncp_count(ty: CoxeterType) -> u128 {
    let n = ty.rank() as u64;
    match ty {
        CoxeterType::A(_) => binomial(2 * n + 2, n + 1) / (n as u128 + 2),
        CoxeterType::B(_) => binomial(2 * n, n),
        CoxeterType::D(_) => binomial(2 * n, n) - binomial(2 * n - 2, n - 1),
        CoxeterType::I2(m) => m as u128 + 2,
        CoxeterType::H3 => 32,
        CoxeterType::F4 => 105,
        CoxeterType::H4 => 280,
        CoxeterType::E6 => 833,
        CoxeterType::E7 => 4160,
        CoxeterType::E8 => 25080,
    }
}

pub fn ncp_formula(ty: CoxeterType) -> Option<&'static str> {
    match ty {
        CoxeterType::A(_) => Some("C(2n+2,n+1)/(n+2)"),
        CoxeterType::B(_) => Some("C(2n,n)"),
        CoxeterType::D(_) => Some("C(2n,n)-C(2n-2,n-1)"),
        CoxeterType::I2(_) => Some("m+2"),
        _ => None,
    }
}

/// Number of classical simple elements, `|W|`.
pub fn classical_count(ty: CoxeterType) -> u128 {
    let n = ty.rank() as u128;
    let fact = |k: u128| (1..=k).product::<u128>();
    match ty {
        CoxeterType::A(_) => fact(n + 1),
        CoxeterType::B(_) => (1u128 << n) * fact(n),
        CoxeterType::D(_) => (1u128 << (n - 1)) * fact(n),
        CoxeterType::I2(m) => 2 * m as u128,
        _ => group_order_formula(ty),
    }
}

pub fn classical_formula(ty: CoxeterType) -> Option<&'static str> {
    match ty {
        CoxeterType::A(_) => Some("(n+1)!"),
        CoxeterType::B(_) => Some("2^n n!"),
        CoxeterType::D(_) => Some("2^(n-1) n!"),
        CoxeterType::I2(_) => Some("2m"),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::degrees;

    /// `∏ (h + d_i) / d_i` with `h` the largest degree.
    fn catalan_product(ty: CoxeterType) -> u128 {
        let d = degrees(ty);
        let h = *d.iter().max().unwrap() as u128;
        let num: u128 = d.iter().map(|&x| h + x as u128).product();
        let den: u128 = d.iter().map(|&x| x as u128).product();
        assert_eq!(num % den, 0);
        num / den
    }

    #[test]
    fn formulas_match_catalan_products() {
        let mut types: Vec<CoxeterType> = (1..=7).map(CoxeterType::A).collect();
        types.extend((2..=6).map(CoxeterType::B));
        types.extend((3..=6).map(CoxeterType::D));
        types.extend((3..=12).map(CoxeterType::I2));
        types.extend([CoxeterType::H3, CoxeterType::F4, CoxeterType::H4]);
        types.extend([CoxeterType::E6, CoxeterType::E7, CoxeterType::E8]);
        for ty in types {
            assert_eq!(ncp_count(ty), catalan_product(ty), "{ty}");
            assert_eq!(classical_count(ty), group_order_formula(ty), "{ty}");
        }
    }

    #[test]
    fn examples() {
        assert_eq!(ncp_count(CoxeterType::B(6)), 924);
        assert_eq!(ncp_count(CoxeterType::I2(7)), 9);
        assert_eq!(ncp_count(CoxeterType::D(3)), ncp_count(CoxeterType::A(3)));
        assert_eq!(classical_count(CoxeterType::B(3)), 48);
    }
}
