//! Closed-form predictions for cone exponents and chamber counts.

use crate::deform::{require_shi_catalan, EquivMult};
use crate::error::Result;
use crate::rootsys::{orbit_exponents, RootSystem, WeylType};

/// Whether `(rs, a, b)` is the exceptional G2 case: `a = b` with `b_1 + b_2`
/// odd.
pub fn is_g2_exception(rs: &RootSystem, a: &EquivMult, b: &EquivMult) -> bool {
    rs.label().kind == WeylType::G && a == b && b.values().iter().sum::<u32>() % 2 == 1
}

/// Exponents of `c(A^[-a,b])`, sorted. Always contains 1.
///
/// In the G2 exception these are `1, 2 + b·h, 4 + b·h`. Otherwise they are
/// `1` together with `m^(i) + b·h`, where `m` are the exponents of the union
/// of the orbits on which `a = b`.
pub fn predict_cone_exponents(rs: &RootSystem, a: &EquivMult, b: &EquivMult) -> Result<Vec<i64>> {
    require_shi_catalan(rs, a, b)?;
    let bh = b.dot_h(rs);
    let mut out = vec![1];
    if is_g2_exception(rs, a, b) {
        out.extend([2 + bh, 4 + bh]);
    } else {
        let zero_set: Vec<usize> = (0..rs.orbit_count()).filter(|&j| a.get(j) == b.get(j)).collect();
        out.extend(orbit_exponents(rs, &zero_set)?.iter().map(|m| m + bh));
    }
    out.sort_unstable();
    Ok(out)
}

/// Predicted exponents of the multiarrangement `(A(W), a + b + 1)`: the cone
/// exponents with the leading 1 removed.
pub fn predict_ziegler_exponents(rs: &RootSystem, a: &EquivMult, b: &EquivMult) -> Result<Vec<i64>> {
    let mut e = predict_cone_exponents(rs, a, b)?;
    let i = e.iter().position(|&x| x == 1).expect("cone exponents contain 1");
    e.remove(i);
    Ok(e)
}

/// Chamber count as the product `∏ (1 + e_i)` over the non-trivial cone
/// exponents.
pub fn product_chamber_count(cone_exponents: &[i64]) -> i64 {
    let mut e = cone_exponents.to_vec();
    if let Some(i) = e.iter().position(|&x| x == 1) {
        e.remove(i);
    }
    e.iter().map(|x| 1 + x).product()
}

/// The chamber formula in its printed form, without the `+1` per factor:
/// `(2 + 3b_1 + 3b_2)(4 + 3b_1 + 3b_2)` in the G2 exception, `∏ (m^(j) + b·h)`
/// otherwise. Kept for side-by-side reporting; it does not count chambers.
pub fn printed_chamber_formula(rs: &RootSystem, a: &EquivMult, b: &EquivMult) -> Result<i64> {
    require_shi_catalan(rs, a, b)?;
    let bh = b.dot_h(rs);
    if is_g2_exception(rs, a, b) {
        return Ok((2 + bh) * (4 + bh));
    }
    let zero_set: Vec<usize> = (0..rs.orbit_count()).filter(|&j| a.get(j) == b.get(j)).collect();
    Ok(orbit_exponents(rs, &zero_set)?.iter().map(|m| m + bh).product())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::deform::deformation_size;
    use crate::rootsys::{build_root_system, TypeLabel};

    fn rs(s: &str) -> RootSystem {
        build_root_system(s.parse().unwrap()).unwrap()
    }

    fn m(v: &[u32]) -> EquivMult {
        EquivMult::new(v.to_vec())
    }

    #[test]
    fn examples() {
        assert_eq!(predict_cone_exponents(&rs("G2"), &m(&[1, 0]), &m(&[1, 0])).unwrap(), vec![1, 5, 7]);
        assert_eq!(predict_cone_exponents(&rs("A2"), &m(&[0]), &m(&[1])).unwrap(), vec![1, 3, 3]);
        assert_eq!(
            predict_cone_exponents(&rs("B3"), &m(&[1, 1]), &m(&[1, 2])).unwrap(),
            vec![1, 11, 11, 11]
        );
        assert_eq!(predict_cone_exponents(&rs("A2"), &m(&[1]), &m(&[1])).unwrap(), vec![1, 4, 5]);
    }

    #[test]
    fn rejects_non_shi_catalan() {
        assert!(predict_cone_exponents(&rs("A2"), &m(&[2]), &m(&[0])).is_err());
    }

    #[test]
    fn printed_formula_known_values() {
        assert_eq!(printed_chamber_formula(&rs("G2"), &m(&[1, 0]), &m(&[1, 0])).unwrap(), 35);
        assert_eq!(printed_chamber_formula(&rs("A1"), &m(&[1]), &m(&[1])).unwrap(), 3);
        assert_eq!(product_chamber_count(&[1, 5, 7]), 48);
    }

    #[test]
    fn sum_rule_on_all_types() {
        for label in TypeLabel::all() {
            let r = build_root_system(label).unwrap();
            let k = r.orbit_count();
            let mut grid: Vec<(Vec<u32>, Vec<u32>)> = vec![(vec![], vec![])];
            for _ in 0..k {
                grid = grid
                    .into_iter()
                    .flat_map(|(a, b)| {
                        (0..=3u32).flat_map(move |bj| {
                            let (a, b) = (a.clone(), b.clone());
                            [bj.checked_sub(1), Some(bj)].into_iter().flatten().map(move |aj| {
                                let mut a = a.clone();
                                let mut b = b.clone();
                                a.push(aj);
                                b.push(bj);
                                (a, b)
                            })
                        })
                    })
                    .collect();
            }
            for (a, b) in grid {
                let (a, b) = (m(&a), m(&b));
                let e = predict_cone_exponents(&r, &a, &b).unwrap();
                assert_eq!(e.iter().sum::<i64>() as usize, deformation_size(&r, &a, &b) + 1, "{label} {a} {b}");
            }
        }
    }
}
