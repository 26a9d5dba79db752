//! Base-surface data for the six blowup families: ambient lattice, boundary
//! cycle, and the auxiliary curves through the blowup points.
//!
//! Class assignments are validated by `validate_configuration` (boundary
//! cycle pairings, adjunction, incidence with the auxiliary curves) before
//! any family is built on top of them.

/// Static description of one base pair together with the auxiliary curves.
pub(crate) struct BaseData {
    pub labels: &'static [&'static str],
    /// Symmetric Gram matrix of the ambient basis.
    pub gram: &'static [&'static [i64]],
    pub canonical: &'static [i64],
    /// Boundary components in cyclic order.
    pub boundary: &'static [(&'static str, &'static [i64])],
    pub f_curves: &'static [FCurveData],
}

/// An auxiliary curve on the base: its class, which blowup points `q_i`
/// (1-based boundary indices) lie on it, and the number of consecutive
/// infinitely-near blowups it passes through at each of those points
/// (3 encodes the flex tangency of the n=1 family, 1 is transverse).
pub(crate) struct FCurveData {
    pub label: &'static str,
    pub coords: &'static [i64],
    pub meets: &'static [usize],
    pub tangency: usize,
}

pub(crate) fn base_data(n: usize) -> Option<&'static BaseData> {
    match n {
        1 => Some(&N1),
        2 => Some(&N2),
        3 => Some(&N3),
        4 => Some(&N4),
        5 => Some(&N5),
        6 => Some(&N6),
        _ => None,
    }
}

/// Projective plane with a nodal cubic; the auxiliary curve is the tangent
/// line at a flex point of the cubic (contact of order three).
static N1: BaseData = BaseData {
    labels: &["H"],
    gram: &[&[1]],
    canonical: &[-3],
    boundary: &[("D_1", &[3])],
    f_curves: &[FCurveData {
        label: "F",
        coords: &[1],
        meets: &[1],
        tangency: 3,
    }],
};

/// Hirzebruch surface with negative section `B` (`B^2 = -2`) and fiber `A`;
/// the two boundary curves lie in `|B + 2A|`, the blowup points sit on a
/// common fiber `F_1`, and `F_2` is the negative section itself.
static N2: BaseData = BaseData {
    labels: &["B", "A"],
    gram: &[&[-2, 1], &[1, 0]],
    canonical: &[-2, -4],
    boundary: &[("D_1", &[1, 2]), ("D_2", &[1, 2])],
    f_curves: &[
        FCurveData {
            label: "F_1",
            coords: &[0, 1],
            meets: &[1, 2],
            tangency: 1,
        },
        FCurveData {
            label: "F_2",
            coords: &[1, 0],
            meets: &[],
            tangency: 1,
        },
    ],
};

/// Projective plane with a triangle of lines; the blowup points are
/// collinear on the auxiliary line `F`.
static N3: BaseData = BaseData {
    labels: &["H"],
    gram: &[&[1]],
    canonical: &[-3],
    boundary: &[("D_1", &[1]), ("D_2", &[1]), ("D_3", &[1])],
    f_curves: &[FCurveData {
        label: "F",
        coords: &[1],
        meets: &[1, 2, 3],
        tangency: 1,
    }],
};

/// Quadric with the toric square boundary: `D_1, D_3` in one ruling class,
/// `D_2, D_4` in the other; `F_1` passes through `q_1, q_3` and `F_2`
/// through `q_2, q_4`.
static N4: BaseData = BaseData {
    labels: &["A", "B"],
    gram: &[&[0, 1], &[1, 0]],
    canonical: &[-2, -2],
    boundary: &[
        ("D_1", &[1, 0]),
        ("D_2", &[0, 1]),
        ("D_3", &[1, 0]),
        ("D_4", &[0, 1]),
    ],
    f_curves: &[
        FCurveData {
            label: "F_1",
            coords: &[0, 1],
            meets: &[1, 3],
            tangency: 1,
        },
        FCurveData {
            label: "F_2",
            coords: &[1, 0],
            meets: &[2, 4],
            tangency: 1,
        },
    ],
};

/// Degree-five del Pezzo surface: the boundary pentagon and the inner star
/// of (-1)-curves forming the Petersen-graph configuration; `F_i` meets the
/// boundary exactly in `q_i` on `D_i`.
static N5: BaseData = BaseData {
    labels: &["H", "e_1", "e_2", "e_3", "e_4"],
    gram: &[
        &[1, 0, 0, 0, 0],
        &[0, -1, 0, 0, 0],
        &[0, 0, -1, 0, 0],
        &[0, 0, 0, -1, 0],
        &[0, 0, 0, 0, -1],
    ],
    canonical: &[-3, 1, 1, 1, 1],
    boundary: &[
        ("D_1", &[0, 1, 0, 0, 0]),
        ("D_2", &[1, -1, -1, 0, 0]),
        ("D_3", &[0, 0, 1, 0, 0]),
        ("D_4", &[1, 0, -1, -1, 0]),
        ("D_5", &[1, -1, 0, 0, -1]),
    ],
    f_curves: &[
        FCurveData {
            label: "F_1",
            coords: &[1, -1, 0, -1, 0],
            meets: &[1],
            tangency: 1,
        },
        FCurveData {
            label: "F_2",
            coords: &[1, 0, 0, -1, -1],
            meets: &[2],
            tangency: 1,
        },
        FCurveData {
            label: "F_3",
            coords: &[1, 0, -1, 0, -1],
            meets: &[3],
            tangency: 1,
        },
        FCurveData {
            label: "F_4",
            coords: &[0, 0, 0, 1, 0],
            meets: &[4],
            tangency: 1,
        },
        FCurveData {
            label: "F_5",
            coords: &[0, 0, 0, 0, 1],
            meets: &[5],
            tangency: 1,
        },
    ],
};

/// Degree-six del Pezzo surface with the hexagon of (-1)-curves; the five
/// auxiliary curves `F_k` are indexed by which boundary points they pass
/// through, and their classes span the base Picard lattice with the single
/// relation `F_{1,4} + F_{2,5} + F_{3,6} = F_{1,3,5} + F_{2,4,6}`.
static N6: BaseData = BaseData {
    labels: &["H", "e_1", "e_2", "e_3"],
    gram: &[
        &[1, 0, 0, 0],
        &[0, -1, 0, 0],
        &[0, 0, -1, 0],
        &[0, 0, 0, -1],
    ],
    canonical: &[-3, 1, 1, 1],
    boundary: &[
        ("D_1", &[0, 1, 0, 0]),
        ("D_2", &[1, -1, -1, 0]),
        ("D_3", &[0, 0, 1, 0]),
        ("D_4", &[1, 0, -1, -1]),
        ("D_5", &[0, 0, 0, 1]),
        ("D_6", &[1, -1, 0, -1]),
    ],
    f_curves: &[
        FCurveData {
            label: "F_{1,4}",
            coords: &[1, -1, 0, 0],
            meets: &[1, 4],
            tangency: 1,
        },
        FCurveData {
            label: "F_{2,5}",
            coords: &[1, 0, 0, -1],
            meets: &[2, 5],
            tangency: 1,
        },
        FCurveData {
            label: "F_{3,6}",
            coords: &[1, 0, -1, 0],
            meets: &[3, 6],
            tangency: 1,
        },
        FCurveData {
            label: "F_{1,3,5}",
            coords: &[2, -1, -1, -1],
            meets: &[1, 3, 5],
            tangency: 1,
        },
        FCurveData {
            label: "F_{2,4,6}",
            coords: &[1, 0, 0, 0],
            meets: &[2, 4, 6],
            tangency: 1,
        },
    ],
};

