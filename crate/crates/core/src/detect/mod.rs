//! Pattern detection, exact oracles and recognizers.

pub mod oracle;
pub mod pattern;
pub mod recognize;

pub use oracle::{
    alpha, check_proper, chi_exact, chi_exact_with, cliques_of_size_in, color_count, dsatur, max_clique, max_clique_in,
    max_cliques, max_cliques_with, max_stable, max_stable_in, maximal_cliques, omega, omega_in, omega_with, Coloring,
    Limits,
};
pub use pattern::{find_induced, find_induced_graph, find_induced_within, is_induced_embedding, Pattern};
pub use recognize::{
    class_violation, clique_partition, imperfection_witness, in_class, is_3k1_free, is_chordal, is_chordal_in,
    is_good_wrt, is_p3_free, is_perfect, is_perfect_with, is_quasi_line, r_set, CliquePartition, QuasiLineCertificate,
};
