//! Root systems, subalgebra tables, codimension bounds and homotopy of the
//! good locus of `G`-character varieties of free groups.

pub mod abelian;
pub mod bounds;
pub mod groups;
pub mod homotopy;
pub mod localmodel;
pub mod rootsys;
pub mod snf;
pub mod subalg;

pub use abelian::FgAbelianGroup;
pub use bounds::{CodimReport, SingularLocusReport, Verdict};
pub use groups::{Factor, GroupDescriptor, Isogeny};
pub use homotopy::{HomotopyDatabase, HomotopyResult, Validity};
pub use localmodel::{HomologySupport, WeightProfile};
pub use rootsys::{DynkinDiagram, Family, RootSystem, RootVector, SimpleType};
pub use subalg::{BdSRecord, LeviRecord};
