//! C interface to `wedderga-core`.
//!
//! Every function returns a [`WgStatus`]; results go through out-pointers.
//! Handles are opaque and must be released with the matching `_free`.

use std::ffi::{c_char, CStr};
use std::panic::{catch_unwind, AssertUnwindSafe};

use wedderga_core::classifier::{
    csp_prime_critical, family_predicate_1, family_predicate_2, family_predicate_3, CriticalVerdict,
};
use wedderga_core::constructions::GroupSpec;
use wedderga_core::io::{decomposition_report, DecompositionReport};
use wedderga_core::permgroup::{FiniteGroup, Permutation};
use wedderga_core::Error;

/// Status codes.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WgStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    Parse = 3,
    BoundExceeded = 4,
    UnknownLabel = 5,
    BufferTooSmall = 6,
    Internal = 7,
}

/// Outcome of the criticality test.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WgVerdict {
    Critical = 0,
    NotCritical = 1,
    Unknown = 2,
}

/// A finite group.
pub struct WgGroup(FiniteGroup);

/// A Wedderburn decomposition, grouped into lines `multiplicity x algebra`.
pub struct WgDecomposition(DecompositionReport);

fn status(e: &Error) -> WgStatus {
    match e {
        Error::Parse { .. } => WgStatus::Parse,
        Error::BoundExceeded { .. } => WgStatus::BoundExceeded,
        Error::UnknownLabel(_) => WgStatus::UnknownLabel,
        _ => WgStatus::InvalidArgument,
    }
}

fn guard(f: impl FnOnce() -> Result<(), WgStatus>) -> WgStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => WgStatus::Ok,
        Ok(Err(s)) => s,
        Err(_) => WgStatus::Internal,
    }
}

unsafe fn out<'a, T>(p: *mut T) -> Result<&'a mut T, WgStatus> {
    p.as_mut().ok_or(WgStatus::NullPointer)
}

unsafe fn group<'a>(g: *const WgGroup) -> Result<&'a FiniteGroup, WgStatus> {
    g.as_ref().map(|g| &g.0).ok_or(WgStatus::NullPointer)
}

/// Builds a named group or a spec such as `dihedral(8)`.
///
/// # Safety
/// `spec` must be a NUL-terminated string and `result` writable.
#[no_mangle]
pub unsafe extern "C" fn wg_group_from_spec(spec: *const c_char, result: *mut *mut WgGroup) -> WgStatus {
    guard(|| {
        let result = out(result)?;
        if spec.is_null() {
            return Err(WgStatus::NullPointer);
        }
        let text = CStr::from_ptr(spec).to_str().map_err(|_| WgStatus::InvalidArgument)?;
        let g = GroupSpec::parse(text).and_then(|s| s.build()).map_err(|e| status(&e))?;
        *result = Box::into_raw(Box::new(WgGroup(g)));
        Ok(())
    })
}

/// Builds the group generated by `ngens` permutations of `degree` points,
/// given as consecutive 1-based image lists in `images`.
///
/// # Safety
/// `images` must hold `degree * ngens` values and `result` be writable.
#[no_mangle]
pub unsafe extern "C" fn wg_group_from_images(
    degree: usize,
    images: *const u32,
    ngens: usize,
    bound: usize,
    result: *mut *mut WgGroup,
) -> WgStatus {
    guard(|| {
        let result = out(result)?;
        if images.is_null() {
            return Err(WgStatus::NullPointer);
        }
        if degree == 0 || ngens == 0 {
            return Err(WgStatus::InvalidArgument);
        }
        let all = std::slice::from_raw_parts(images, degree * ngens);
        let perms = all
            .chunks(degree)
            .map(|c| Permutation::from_one_based(&c.iter().map(|&x| x as usize).collect::<Vec<_>>()))
            .collect::<Result<Vec<_>, _>>()
            .map_err(|e| status(&e))?;
        let g = FiniteGroup::from_generators(degree, &perms, bound).map_err(|e| status(&e))?;
        *result = Box::into_raw(Box::new(WgGroup(g)));
        Ok(())
    })
}

/// # Safety
/// `g` must come from a `wg_group_*` constructor, or be null.
#[no_mangle]
pub unsafe extern "C" fn wg_group_free(g: *mut WgGroup) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// # Safety
/// `g` must be a live handle and `order` writable.
#[no_mangle]
pub unsafe extern "C" fn wg_group_order(g: *const WgGroup, order: *mut usize) -> WgStatus {
    guard(|| {
        *out(order)? = group(g)?.order();
        Ok(())
    })
}

/// Decides CSP'-criticality for groups of order at most `bound`.
///
/// # Safety
/// `g` must be a live handle and `verdict` writable.
#[no_mangle]
pub unsafe extern "C" fn wg_critical(g: *const WgGroup, bound: usize, verdict: *mut WgVerdict) -> WgStatus {
    guard(|| {
        let verdict = out(verdict)?;
        let r = csp_prime_critical(group(g)?, "", bound).map_err(|e| status(&e))?;
        *verdict = match r.verdict {
            CriticalVerdict::Critical => WgVerdict::Critical,
            CriticalVerdict::NotCritical => WgVerdict::NotCritical,
            CriticalVerdict::Unknown => WgVerdict::Unknown,
        };
        Ok(())
    })
}

/// # Safety
/// `g` must be a live handle and `result` writable.
#[no_mangle]
pub unsafe extern "C" fn wg_decompose(g: *const WgGroup, bound: usize, result: *mut *mut WgDecomposition) -> WgStatus {
    guard(|| {
        let result = out(result)?;
        let r = decomposition_report(group(g)?, "", bound).map_err(|e| status(&e))?;
        *result = Box::into_raw(Box::new(WgDecomposition(r)));
        Ok(())
    })
}

/// # Safety
/// `d` must come from `wg_decompose`, or be null.
#[no_mangle]
pub unsafe extern "C" fn wg_decomposition_free(d: *mut WgDecomposition) {
    if !d.is_null() {
        drop(Box::from_raw(d));
    }
}

/// Number of distinct lines.
///
/// # Safety
/// `d` must be a live handle and `len` writable.
#[no_mangle]
pub unsafe extern "C" fn wg_decomposition_len(d: *const WgDecomposition, len: *mut usize) -> WgStatus {
    guard(|| {
        let d = d.as_ref().ok_or(WgStatus::NullPointer)?;
        *out(len)? = d.0.lines.len();
        Ok(())
    })
}

/// Multiplicity and `Q`-dimension of one copy for line `i`.
///
/// # Safety
/// `d` must be a live handle; the out-pointers writable.
#[no_mangle]
pub unsafe extern "C" fn wg_decomposition_line(
    d: *const WgDecomposition,
    i: usize,
    multiplicity: *mut usize,
    dimension: *mut u64,
) -> WgStatus {
    guard(|| {
        let d = d.as_ref().ok_or(WgStatus::NullPointer)?;
        let line = d.0.lines.get(i).ok_or(WgStatus::InvalidArgument)?;
        *out(multiplicity)? = line.multiplicity;
        *out(dimension)? = line.total_dimension;
        Ok(())
    })
}

/// Writes the algebra name of line `i`, NUL-terminated, into `buf`.
/// `needed` receives the required size including the NUL; with a short
/// buffer nothing is written and `BufferTooSmall` is returned.
///
/// # Safety
/// `d` must be a live handle, `buf` hold `len` bytes (or be null when
/// `len` is 0) and `needed` be writable.
#[no_mangle]
pub unsafe extern "C" fn wg_decomposition_name(
    d: *const WgDecomposition,
    i: usize,
    buf: *mut c_char,
    len: usize,
    needed: *mut usize,
) -> WgStatus {
    guard(|| {
        let d = d.as_ref().ok_or(WgStatus::NullPointer)?;
        let name = &d.0.lines.get(i).ok_or(WgStatus::InvalidArgument)?.name;
        *out(needed)? = name.len() + 1;
        if len < name.len() + 1 {
            return Err(WgStatus::BufferTooSmall);
        }
        if buf.is_null() {
            return Err(WgStatus::NullPointer);
        }
        std::ptr::copy_nonoverlapping(name.as_ptr(), buf as *mut u8, name.len());
        *buf.add(name.len()) = 0;
        Ok(())
    })
}

/// Family predicates: `1 (q, p)`, `2 (p, n, k)` or `3 (p)`.
///
/// # Safety
/// `params` must hold `nparams` values and `value` be writable.
#[no_mangle]
pub unsafe extern "C" fn wg_family_predicate(
    family: u32,
    params: *const u64,
    nparams: usize,
    value: *mut bool,
) -> WgStatus {
    guard(|| {
        let value = out(value)?;
        if params.is_null() {
            return Err(WgStatus::NullPointer);
        }
        let p = std::slice::from_raw_parts(params, nparams);
        let r = match (family, p) {
            (1, &[q, p]) => family_predicate_1(q, p),
            (2, &[p, n, k]) => family_predicate_2(p, n, k),
            (3, &[p]) => family_predicate_3(p),
            _ => return Err(WgStatus::InvalidArgument),
        };
        *value = r.map_err(|e| status(&e))?;
        Ok(())
    })
}
