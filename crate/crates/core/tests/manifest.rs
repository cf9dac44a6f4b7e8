use std::collections::BTreeSet;

use cevian::suite::registry;

/// One id per verified statement; a new or removed check must update this list.
const MANIFEST: &[&str] = &[
    "def_objects",
    "thm_concurrence",
    "gamma_fixed_points",
    "prop_PS",
    "prop_gpdp_a",
    "prop_gpdp_b",
    "prop_gpdp_c",
    "thm_pedal_conic",
    "cor_pedal_cross_ratio",
    "cor_simson_converse",
    "prop_Q2",
    "cor_Q2",
    "thm_gamma_delta",
    "cor_gamma_G",
    "prop_unique_conic",
    "prop_pedal_involution",
    "cor_h_commute",
    "lem_line_image",
    "prop_gamma_linf",
    "prop_parallel_AA",
    "thm_simson",
    "prop_pedal_converse",
    "prop_gammaH",
    "prop_OQ",
    "thm_nine_points",
    "thm_eight_poles",
    "prop_circumcevian",
    "thm_O_perspector",
    "lem_collineation",
    "thm_tcc",
    "tcc_formula",
    "thm_persG",
    "appendix_kmid",
    "appendix_commute",
];

#[test]
fn registry_matches_manifest() {
    let ids: Vec<&str> = registry().iter().map(|c| c.id).collect();
    let unique: BTreeSet<&str> = ids.iter().copied().collect();
    assert_eq!(unique.len(), ids.len(), "duplicate check id");
    let expected: BTreeSet<&str> = MANIFEST.iter().copied().collect();
    assert_eq!(unique, expected);
}

#[test]
fn every_check_states_its_claim() {
    for c in registry() {
        assert!(!c.statement.is_empty(), "{} has no statement", c.id);
        assert!(!c.hypotheses.is_empty(), "{} has no hypotheses", c.id);
    }
}
