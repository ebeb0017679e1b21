//! Quadratic forms, Hurwitz class numbers, singular moduli and class
//! polynomials.

mod bigfloat;
mod cache;
mod eligibility;
mod forms;
mod hilbert;

pub use cache::{
    cache_path, hilbert_class_poly_cached, parse_cache_doc, render_cache_doc, CacheDoc,
    ComponentDoc, MAX_CACHE_D,
};
pub use eligibility::{
    certificate, corollary_conditions, eligibility, eligibility_of, radical_mod, table_row,
    CandidateSet, Certificate, CorollaryConditions, Eligibility, TableRow,
};
pub use forms::{hurwitz_class_number, reduced_forms, QuadForm};
pub use hilbert::{
    components_squarefree, default_precision, hilbert_class_poly, hilbert_class_poly_at,
    singular_modulus, ClassComponent, SingularModulus, WeightedClassPoly,
};
