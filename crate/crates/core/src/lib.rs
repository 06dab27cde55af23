//! Spectral queries on cographs computed directly from the cotree:
//! congruent diagonalization of `A + xI` in time linear in the vertex
//! count, eigenvalue counting and multiplicities via Sylvester's law of
//! inertia, closed-form multiplicity results for balanced cotrees, full
//! spectra by inertia bisection, graph energy, and borderenergetic
//! verification, all cross-checked against a dense desk-scale oracle.

pub mod cli;
pub mod cotree;
pub mod diagonalize;
pub mod oracle;
pub mod rational;
pub mod spectra;
pub mod verify;

pub use cotree::{
    build_balanced, build_family_kab, build_family_pk2, from_graph, is_valid_p4_witness,
    parse_expression, random_cotree, BalancedSpec, Cotree, Graph, InteriorKind, NodeKind,
    NotACograph,
};
pub use diagonalize::{
    count_in_interval, diagonalize, eigen_counts, multiplicity, DiagnosisResult, EigenCounts,
    Inertia,
};
pub use rational::{format_rational, parse_rational, Rational};
pub use spectra::{
    count_excluding_special, energy, full_spectrum, is_borderenergetic, mult_minus_one,
    mult_upper_bound, mult_zero, special_eigenvalue_nonregular, special_eigenvalue_regular,
    spectrum_kab, spectrum_pk2, EnergyResult, SpectrumReport,
};
