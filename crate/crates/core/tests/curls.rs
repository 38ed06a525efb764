use homflypt::coeff::{delta, LaurentPoly, Var};
use homflypt::curls::*;
use homflypt::skeinrw::Meridian;
use homflypt::young::{c_scalar, partitions, YoungDiagram};

#[test]
fn eigenvalues_hold_through_size_four() {
    let table = eigen_table(4).unwrap();
    assert_eq!(table.len(), 2 * (1 + 2 * 2 + 3 * 3 + 5 * 4));
    for row in &table {
        assert!(row.holds(), "{} i={} {:?}", row.shape, row.i, row.part);
    }
}

#[test]
fn full_twist_acts_by_the_product_of_eigenvalues() {
    for m in 1..=4 {
        for lambda in partitions(m) {
            assert_eq!(full_twist_action(&lambda).unwrap(), full_twist_factor(&lambda).unwrap(), "{lambda}");
        }
    }
}

#[test]
fn reversed_scalar_matches_c_through_size_five() {
    for m in 0..=5 {
        for mu in partitions(m) {
            let lhs = &meridian_scalar_reversed(&mu).mul_poly(&LaurentPoly::var_pow(Var::X, 2 * m as i32)) - &delta();
            assert_eq!(lhs, c_scalar(&YoungDiagram::empty(), &mu).into(), "{mu}");
        }
    }
}

#[test]
fn same_scalar_exists_through_size_four() {
    for m in 1..=4 {
        for lambda in partitions(m) {
            let phi = meridian_scalar_same(&lambda).unwrap();
            assert_eq!(phi, meridian_same_closed_form(&lambda), "{lambda}");
        }
    }
}

#[test]
fn meridian_scalars_agree_with_the_skein_oracle() {
    for m in 1..=4 {
        for lambda in partitions(m) {
            assert!(oracle_meridian_check(&lambda, Meridian::Reversed).unwrap(), "reversed {lambda}");
            assert!(oracle_meridian_check(&lambda, Meridian::Same).unwrap(), "same {lambda}");
        }
    }
}
