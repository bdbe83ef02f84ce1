//! Named test quivers, written in the plain-text quiver format.

use std::sync::Arc;

use valquiver::{Orientation, QuiverFile, ValuedGraph};

#[derive(Debug, Clone, Copy)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub source: &'static str,
    /// Whether the Weyl group is finite.
    pub finite: bool,
}

/// A parsed catalog entry with its orientation.
#[derive(Debug, Clone)]
pub struct CatalogQuiver {
    pub name: &'static str,
    pub finite: bool,
    pub graph: ValuedGraph,
    pub orientation: Arc<Orientation>,
}

impl CatalogEntry {
    pub fn load(&self) -> CatalogQuiver {
        let file: QuiverFile = self.source.parse().expect("catalog entries parse");
        let orientation = Arc::new(file.orientation().expect("catalog entries are oriented"));
        CatalogQuiver {
            name: self.name,
            finite: self.finite,
            graph: file.graph,
            orientation,
        }
    }

    pub fn rank(&self) -> usize {
        self.load().graph.rank()
    }
}

pub const A2: CatalogEntry = CatalogEntry {
    name: "A2",
    source: "n 2\nedge 1 2 1 1\narrow 1 2\n",
    finite: true,
};

pub const A3_LINEAR: CatalogEntry = CatalogEntry {
    name: "A3 1->2->3",
    source: "n 3\nedge 1 2 1 1\nedge 2 3 1 1\narrow 1 2\narrow 2 3\n",
    finite: true,
};

pub const A3_SOURCE: CatalogEntry = CatalogEntry {
    name: "A3 source 2",
    source: "n 3\nedge 1 2 1 1\nedge 2 3 1 1\narrow 2 1\narrow 2 3\n",
    finite: true,
};

pub const A3_SINK: CatalogEntry = CatalogEntry {
    name: "A3 sink 2",
    source: "n 3\nedge 1 2 1 1\nedge 2 3 1 1\narrow 1 2\narrow 3 2\n",
    finite: true,
};

pub const B2: CatalogEntry = CatalogEntry {
    name: "B2",
    source: "n 2\nedge 1 2 2 1\narrow 1 2\n",
    finite: true,
};

pub const G2: CatalogEntry = CatalogEntry {
    name: "G2",
    source: "n 2\nedge 1 2 3 1\narrow 1 2\n",
    finite: true,
};

pub const KRONECKER: CatalogEntry = CatalogEntry {
    name: "Kronecker",
    source: "n 2\nedge 1 2 2 2\narrow 1 2\n",
    finite: false,
};

/// `1 =(2,2)= 2 =(2,2)= 3`, indefinite.
pub const CHAIN3_DOUBLE: CatalogEntry = CatalogEntry {
    name: "rank-3 double chain",
    source: "n 3\nedge 1 2 2 2\nedge 2 3 2 2\narrow 1 2\narrow 2 3\n",
    finite: false,
};

pub const A4: CatalogEntry = CatalogEntry {
    name: "A4 alternating",
    source: "n 4\nedge 1 2 1 1\nedge 2 3 1 1\nedge 3 4 1 1\narrow 1 2\narrow 3 2\narrow 3 4\n",
    finite: true,
};

pub const D4: CatalogEntry = CatalogEntry {
    name: "D4",
    source: "n 4\nedge 1 2 1 1\nedge 1 3 1 1\nedge 1 4 1 1\narrow 2 1\narrow 3 1\narrow 4 1\n",
    finite: true,
};

pub const B3: CatalogEntry = CatalogEntry {
    name: "B3",
    source: "n 3\nedge 1 2 1 1\nedge 2 3 2 1\narrow 1 2\narrow 2 3\n",
    finite: true,
};

/// Affine `Ã3`: a square with an acyclic orientation.
pub const A3_AFFINE: CatalogEntry = CatalogEntry {
    name: "affine A3 square",
    source: "n 4\nedge 1 2 1 1\nedge 2 3 1 1\nedge 3 4 1 1\nedge 1 4 1 1\narrow 1 2\narrow 2 3\narrow 1 4\narrow 4 3\n",
    finite: false,
};

/// Affine `Ã2`: a triangle.
pub const A2_AFFINE: CatalogEntry = CatalogEntry {
    name: "affine A2 triangle",
    source: "n 3\nedge 1 2 1 1\nedge 2 3 1 1\nedge 1 3 1 1\narrow 1 2\narrow 2 3\narrow 1 3\n",
    finite: false,
};

/// Affine `C̃2`: `1 =(2,1)= 2 =(1,2)= 3`.
pub const C2_AFFINE: CatalogEntry = CatalogEntry {
    name: "affine C2 chain",
    source: "n 3\nedge 1 2 2 1\nedge 2 3 1 2\narrow 1 2\narrow 2 3\n",
    finite: false,
};

/// Rank 2 with `b12·b21 = 4`, affine.
pub const RANK2_AFFINE_41: CatalogEntry = CatalogEntry {
    name: "rank-2 (4,1)",
    source: "n 2\nedge 1 2 4 1\narrow 1 2\n",
    finite: false,
};

/// Rank 2 with `b12·b21 = 6`, hyperbolic.
pub const RANK2_HYPERBOLIC_32: CatalogEntry = CatalogEntry {
    name: "rank-2 (3,2)",
    source: "n 2\nedge 1 2 3 2\narrow 1 2\n",
    finite: false,
};

/// Rank 2 with `b12·b21 = 9`, hyperbolic.
pub const RANK2_HYPERBOLIC_33: CatalogEntry = CatalogEntry {
    name: "rank-2 (3,3)",
    source: "n 2\nedge 1 2 3 3\narrow 2 1\n",
    finite: false,
};

/// The quivers used for the principal-sequence and Coxeter checks.
pub const CORE: &[CatalogEntry] = &[
    A2,
    A3_LINEAR,
    A3_SOURCE,
    A3_SINK,
    B2,
    G2,
    KRONECKER,
    CHAIN3_DOUBLE,
];

/// Every oriented quiver of rank at most four in the catalog.
pub const RANK_LE_4: &[CatalogEntry] = &[
    A2,
    A3_LINEAR,
    A3_SOURCE,
    A3_SINK,
    B2,
    G2,
    KRONECKER,
    CHAIN3_DOUBLE,
    B3,
    A2_AFFINE,
    C2_AFFINE,
    A4,
    D4,
    A3_AFFINE,
];

/// Every quiver of rank at most three, for the finite-type check.
pub const RANK_LE_3: &[CatalogEntry] = &[
    A2,
    A3_LINEAR,
    B2,
    G2,
    B3,
    KRONECKER,
    CHAIN3_DOUBLE,
    A2_AFFINE,
    C2_AFFINE,
    RANK2_AFFINE_41,
    RANK2_HYPERBOLIC_32,
    RANK2_HYPERBOLIC_33,
];
