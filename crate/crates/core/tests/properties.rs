mod common;

use common::*;

#[test]
fn counts_do_not_depend_on_the_prime() {
    check_field_independence().unwrap();
}

#[test]
fn g_vectors_are_injective_and_pairs_are_well_formed() {
    check_g_vectors_and_invariants().unwrap();
}

#[test]
fn decompose_then_rebuild() {
    check_decompose_rebuild(500).unwrap();
}

#[test]
fn convex_restriction_of_shifted_shapes() {
    check_convex_restrictions(20).unwrap();
}

#[test]
fn disconnected_counts_convolve() {
    check_disconnected_convolution().unwrap();
}

#[test]
fn closed_forms_and_recursions() {
    check_closed_forms().unwrap();
    check_recursions().unwrap();
}

#[test]
fn derived_equivalent_pair_differs() {
    check_derived_pair().unwrap();
}
