//! The coincidence tables: 48 parametrized isomorphisms between a coset
//! family and a principal W-algebra orbifold of a small target algebra.
//!
//! Each row gives `ψ(n, m, r)` for the source family and the offset `X` of
//! the target level `s = −shift(r) + X`; by the target dictionary `X` is also
//! the parameter `ψ'` of the target curve.

use super::target::TargetKind;
use crate::liedata::Family;

/// A transcribed row: source, target kind, item number, `ψ`, `X`, and the
/// right-hand sides of the exclusions `r ≠ …`.
pub(crate) struct RawEntry {
    pub source: Family,
    pub kind: TargetKind,
    pub item: u8,
    pub psi: &'static str,
    pub offset: &'static str,
    pub exclusions: &'static [&'static str],
}

const fn row(
    source: Family,
    kind: TargetKind,
    item: u8,
    psi: &'static str,
    offset: &'static str,
    exclusions: &'static [&'static str],
) -> RawEntry {
    RawEntry {
        source,
        kind,
        item,
        psi,
        offset,
        exclusions,
    }
}

use Family::{B1, B2, C2, D1};

pub(crate) static TABLE: [RawEntry; 48] = [
    // 1B with sp
    row(
        B1,
        TargetKind::Sp,
        1,
        "(1+m+n+r)/(1+m)",
        "(1+m+n+r)/(2(n+r))",
        &[],
    ),
    row(
        B1,
        TargetKind::Sp,
        2,
        "2(m+n)/(1+2m+2r)",
        "(1-2n+2r)/(2(1+2m+2r))",
        &[],
    ),
    row(
        B1,
        TargetKind::Sp,
        3,
        "(1+2m+2n+2r)/(2m)",
        "(1+2n+2r)/(2(1+2m+2n+2r))",
        &[],
    ),
    row(
        B1,
        TargetKind::Sp,
        4,
        "(1+m+n)/(1+m+r)",
        "(1+m+r)/(2(r-n))",
        &["n"],
    ),
    row(
        B1,
        TargetKind::Sp,
        5,
        "2(m+n-r)/(1+2m-2r)",
        "(r-m-n)/(2r-2m-1)",
        &[],
    ),
    row(
        B1,
        TargetKind::Sp,
        6,
        "(1+2m+2n-2r)/(2(m-r))",
        "(r-m)/(2r-2m-2n-1)",
        &["m"],
    ),
    // 1D with sp
    row(D1, TargetKind::Sp, 1, "(m+n+r)/m", "(n+r)/(2(m+n+r))", &[]),
    row(
        D1,
        TargetKind::Sp,
        2,
        "(2m+2n-1)/(2m+2r+1)",
        "(1-n+r)/(1+2m+2r)",
        &[],
    ),
    row(
        D1,
        TargetKind::Sp,
        3,
        "(1+2m+2n+2r)/(2(1+m))",
        "(1+2m+2n+2r)/(2(2r+2n-1))",
        &[],
    ),
    row(
        D1,
        TargetKind::Sp,
        4,
        "(1+2m+2n)/(2(1+m+r))",
        "(1+m+r)/(1-2n+2r)",
        &[],
    ),
    row(
        D1,
        TargetKind::Sp,
        5,
        "(2m+2n-2r-1)/(2m-2r+1)",
        "(1-2m-2n+2r)/(2(2r-2m-1))",
        &[],
    ),
    row(
        D1,
        TargetKind::Sp,
        6,
        "(m+n-r)/(m-r)",
        "(r-m)/(2(r-m-n))",
        &["m", "n+m"],
    ),
    // 2B with sp
    row(
        B2,
        TargetKind::Sp,
        1,
        "(1+2m-2n+2r)/(2(1+2m))",
        "(1+2m-2n+2r)/(4(r-n))",
        &["n"],
    ),
    row(
        B2,
        TargetKind::Sp,
        2,
        "(1+2m-2n)/(2(1+2m+2r))",
        "(1+2m+2r)/(4(n+r))",
        &[],
    ),
    row(
        B2,
        TargetKind::Sp,
        3,
        "(m-n+r)/(2m-1)",
        "(1-2n+2r)/(4(m-n+r))",
        &["n-m"],
    ),
    row(
        B2,
        TargetKind::Sp,
        4,
        "(m-n-r)/(2m-2r-1)",
        "(1-2m+2r)/(4(n-m+r))",
        &["m-n"],
    ),
    row(
        B2,
        TargetKind::Sp,
        5,
        "(2m-2n-2r-1)/(4(m-r))",
        "(1-2m+2n+2r)/(4(r-m))",
        &["m"],
    ),
    row(
        B2,
        TargetKind::Sp,
        6,
        "(2m-2n-1)/(4(m+r))",
        "(1+2n+2r)/(4(m+r))",
        &[],
    ),
    // 2C with sp
    row(
        C2,
        TargetKind::Sp,
        1,
        "(1+m+n+r)/(1+2m)",
        "(1+m+n+r)/(1+2n+2r)",
        &[],
    ),
    row(
        C2,
        TargetKind::Sp,
        2,
        "(1+m+n)/(1+2m+2r)",
        "(1+2m+2r)/(2(2r-2n-1))",
        &[],
    ),
    row(
        C2,
        TargetKind::Sp,
        3,
        "(1+2m+2n+2r)/(2(2m-1))",
        "(1+n+r)/(1+2m+2n+2r)",
        &[],
    ),
    row(
        C2,
        TargetKind::Sp,
        4,
        "(m+n)/(2(m+r))",
        "(r-n)/(2(m+r))",
        &[],
    ),
    row(
        C2,
        TargetKind::Sp,
        5,
        "(m+n-r)/(2(m-r))",
        "(r-m-n)/(2(r-m))",
        &["m"],
    ),
    row(
        C2,
        TargetKind::Sp,
        6,
        "(1+2m+2n-2r)/(2(2m-2r-1))",
        "(1-2m+2r)/(2(2r-2m-2n-1))",
        &[],
    ),
    // 1B with so
    row(
        B1,
        TargetKind::SoEven,
        1,
        "2(m+n+r)/(1+2m)",
        "(2n+2r-1)/(2(m+n+r))",
        &[],
    ),
    row(
        B1,
        TargetKind::SoEven,
        2,
        "(1+2m+2n)/(2(m+r))",
        "(2r-2n-1)/(2(m+r))",
        &[],
    ),
    row(
        B1,
        TargetKind::SoEven,
        3,
        "(1+m+n-r)/(1+m-r)",
        "(r-m-n-1)/(r-m-1)",
        &["m+1"],
    ),
    // 1D with so
    row(
        D1,
        TargetKind::SoEven,
        1,
        "(2m+2n+2r-1)/(1+2m)",
        "2(n+r-1)/(2m+2n+2r-1)",
        &[],
    ),
    row(D1, TargetKind::SoEven, 2, "(m+n)/(m+r)", "(r-n)/(m+r)", &[]),
    row(
        D1,
        TargetKind::SoEven,
        3,
        "(1+2m+2n-2r)/(2(1+m-r))",
        "(2r-2m-2n-1)/(2(r-m-1))",
        &["m+1"],
    ),
    // 2B with so
    row(
        B2,
        TargetKind::SoEven,
        1,
        "(2m-2n+2r-1)/(4m)",
        "(2r-2n-1)/(2m-2n+2r-1)",
        &[],
    ),
    row(
        B2,
        TargetKind::SoEven,
        2,
        "(1+2m-2n-2r)/(2(1+2m-2r))",
        "(2r-2m-1)/(2n+2r-2m-1)",
        &[],
    ),
    row(
        B2,
        TargetKind::SoEven,
        3,
        "(m-n)/(2m+2r-1)",
        "(2n+2r-1)/(2m+2r-1)",
        &[],
    ),
    // 2C with so
    row(
        C2,
        TargetKind::SoEven,
        1,
        "(m+n+r)/(2m)",
        "(n+r)/(m+n+r)",
        &[],
    ),
    row(
        C2,
        TargetKind::SoEven,
        2,
        "(1+2m+2n)/(2(2m+2r-1))",
        "2(r-n-1)/(2m+2r-1)",
        &[],
    ),
    row(
        C2,
        TargetKind::SoEven,
        3,
        "(1+m+n-r)/(1+2m-2r)",
        "2(r-m-n-1)/(2r-2m-1)",
        &[],
    ),
    // 1B with osp
    row(
        B1,
        TargetKind::Osp,
        1,
        "(1+2m+2n+2r)/(1+2m)",
        "(n+r)/(1+2m+2n+2r)",
        &[],
    ),
    row(
        B1,
        TargetKind::Osp,
        2,
        "(1+2m+2n)/(1+2m+2r)",
        "(r-n)/(1+2m+2r)",
        &[],
    ),
    row(
        B1,
        TargetKind::Osp,
        3,
        "(1+2m+2n-2r)/(1+2m-2r)",
        "(2r-2m-2n-1)/(2(2r-2m-1))",
        &[],
    ),
    // 1D with osp
    row(
        D1,
        TargetKind::Osp,
        1,
        "2(m+n+r)/(1+2m)",
        "(m+n+r)/(2n+2r-1)",
        &[],
    ),
    row(
        D1,
        TargetKind::Osp,
        2,
        "2(m+n)/(1+2m+2r)",
        "(1-2n+2r)/(2(1+2m+2r))",
        &[],
    ),
    row(
        D1,
        TargetKind::Osp,
        3,
        "2(m+n-r)/(1+2m-2r)",
        "(r-m-n)/(2r-2m-1)",
        &[],
    ),
    // 2B with osp
    row(
        B2,
        TargetKind::Osp,
        1,
        "(m-n+r)/(2m)",
        "(r-n)/(2(m-n+r))",
        &["n-m"],
    ),
    row(
        B2,
        TargetKind::Osp,
        2,
        "(m-n-r)/(2(m-r))",
        "(r-m)/(2(n-m+r))",
        &["m", "m-n"],
    ),
    row(
        B2,
        TargetKind::Osp,
        3,
        "(m-n)/(2(m+r))",
        "(n+r)/(2(m+r))",
        &[],
    ),
    // 2C with osp
    row(
        C2,
        TargetKind::Osp,
        1,
        "(1+2m+2n+2r)/(4m)",
        "(1+2n+2r)/(2(1+2m+2n+2r))",
        &[],
    ),
    row(
        C2,
        TargetKind::Osp,
        2,
        "(1+2m+2n)/(4(m+r))",
        "(m+r)/(2r-2n-1)",
        &[],
    ),
    row(
        C2,
        TargetKind::Osp,
        3,
        "(1+2m+2n-2r)/(4(m-r))",
        "(r-m)/(2r-2m-2n-1)",
        &["m"],
    ),
];
