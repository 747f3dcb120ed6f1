//! C ABI for the kapath library.
//!
//! Conventions: paths travel as opaque `KapathPath` handles; every fallible
//! call returns a [`KapathStatus`] and writes results through out-pointers;
//! strings returned to the caller are NUL-terminated, heap-allocated, and
//! must be released with [`kapath_string_free`]. The horizontal width `a`
//! is passed as a `u32` where `0` encodes "infinite" (horizontal steps
//! forbidden). Counts are returned as decimal strings so bindings never
//! truncate big integers.

use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use kapath::bijection::{case_of_color, phi, psi, BijectionError, CaseTag};
use kapath::enumerate::{
    count_kary_peak_paths, count_sud, count_super, count_suu, ColoredHumpPath,
};
use kapath::identities::{
    verify_bijection, verify_hump_identity, verify_image_hump, verify_image_peak,
    verify_kary_peaks, verify_peak_identity, verify_sud, verify_suu, verify_theorem1_refinement,
    ClaimId,
};
use kapath::path::{HorizontalWidth, LatticePath, PathError, PathParams};
use num_bigint::BigUint;

/// Status of a C-ABI call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KapathStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    IllegalCharacter = 3,
    HorizontalForbidden = 4,
    InvalidParams = 5,
    MalformedColoredPath = 6,
    NoUpStep = 7,
    NotClosed = 8,
    StructureViolation = 9,
    NonIntegerResult = 10,
    BudgetExceeded = 11,
    InternalError = 12,
}

/// Claims checkable through [`kapath_verify_claim`].
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KapathClaim {
    Eq4 = 0,
    Eq5 = 1,
    Eq6 = 2,
    Eq7 = 3,
    Thm1 = 4,
    C1 = 5,
    C2 = 6,
    Narayana = 7,
    Roundtrip = 8,
}

/// Opaque path handle.
pub struct KapathPath(LatticePath);

fn path_error_status(err: &PathError) -> KapathStatus {
    match err {
        PathError::IllegalCharacter { .. } => KapathStatus::IllegalCharacter,
        PathError::HorizontalForbidden => KapathStatus::HorizontalForbidden,
        PathError::NoPointsRight { .. } => KapathStatus::InvalidParams,
        PathError::InvalidRise | PathError::InvalidWidth => KapathStatus::InvalidParams,
    }
}

fn bijection_error_status(err: &BijectionError) -> KapathStatus {
    match err {
        BijectionError::MalformedColoredPath(_) => KapathStatus::MalformedColoredPath,
        BijectionError::NoUpStep => KapathStatus::NoUpStep,
        BijectionError::NotClosed => KapathStatus::NotClosed,
        BijectionError::StructureViolation(_) => KapathStatus::StructureViolation,
    }
}

fn width_of(a: u32) -> HorizontalWidth {
    if a == 0 {
        HorizontalWidth::Infinite
    } else {
        HorizontalWidth::Finite(a)
    }
}

fn params_of(k: u32, a: u32) -> Result<PathParams, KapathStatus> {
    PathParams::new(k, width_of(a)).map_err(|e| path_error_status(&e))
}

fn case_number(case: CaseTag) -> u32 {
    match case {
        CaseTag::I => 1,
        CaseTag::II => 2,
        CaseTag::III => 3,
    }
}

fn export_string(s: String) -> *mut c_char {
    CString::new(s).map_or(std::ptr::null_mut(), CString::into_raw)
}

/// Runs a closure, translating panics into `InternalError`.
fn guarded(f: impl FnOnce() -> KapathStatus) -> KapathStatus {
    catch_unwind(AssertUnwindSafe(f)).unwrap_or(KapathStatus::InternalError)
}

/// Parses a word over `U`, `D`, `H` into a new path handle.
///
/// # Safety
/// `word` must point to a NUL-terminated string and `out` to writable
/// pointer-sized storage. On success the caller owns the handle and must
/// release it with [`kapath_path_free`].
#[no_mangle]
pub unsafe extern "C" fn kapath_path_parse(
    word: *const c_char,
    k: u32,
    a: u32,
    out: *mut *mut KapathPath,
) -> KapathStatus {
    if word.is_null() || out.is_null() {
        return KapathStatus::NullPointer;
    }
    let text = match CStr::from_ptr(word).to_str() {
        Ok(t) => t,
        Err(_) => return KapathStatus::InvalidUtf8,
    };
    guarded(|| {
        let params = match params_of(k, a) {
            Ok(p) => p,
            Err(status) => return status,
        };
        match LatticePath::parse(text, params) {
            Ok(path) => {
                *out = Box::into_raw(Box::new(KapathPath(path)));
                KapathStatus::Ok
            }
            Err(e) => path_error_status(&e),
        }
    })
}

/// Releases a path handle. NULL is ignored.
///
/// # Safety
/// `path` must be a handle from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn kapath_path_free(path: *mut KapathPath) {
    if !path.is_null() {
        drop(Box::from_raw(path));
    }
}

/// Returns the path's word as a fresh string, or NULL on NULL input.
///
/// # Safety
/// `path` must be a valid handle. Free the result with
/// [`kapath_string_free`].
#[no_mangle]
pub unsafe extern "C" fn kapath_path_word(path: *const KapathPath) -> *mut c_char {
    match path.as_ref() {
        Some(p) => export_string(p.0.word()),
        None => std::ptr::null_mut(),
    }
}

/// Releases a string returned by this library. NULL is ignored.
///
/// # Safety
/// `s` must originate from this library and not have been freed already.
#[no_mangle]
pub unsafe extern "C" fn kapath_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Total x-advance of the path; 0 for NULL.
///
/// # Safety
/// `path` must be a valid handle or NULL.
#[no_mangle]
pub unsafe extern "C" fn kapath_path_order(path: *const KapathPath) -> u64 {
    path.as_ref().map_or(0, |p| p.0.order())
}

/// Number of steps in the path; 0 for NULL.
///
/// # Safety
/// `path` must be a valid handle or NULL.
#[no_mangle]
pub unsafe extern "C" fn kapath_path_step_count(path: *const KapathPath) -> u64 {
    path.as_ref().map_or(0, |p| p.0.len() as u64)
}

/// True iff the path ends on the x-axis.
///
/// # Safety
/// `path` must be a valid handle or NULL.
#[no_mangle]
pub unsafe extern "C" fn kapath_path_is_closed(path: *const KapathPath) -> bool {
    path.as_ref().is_some_and(|p| p.0.is_closed())
}

/// True iff the path never goes below the x-axis.
///
/// # Safety
/// `path` must be a valid handle or NULL.
#[no_mangle]
pub unsafe extern "C" fn kapath_path_is_nonnegative(path: *const KapathPath) -> bool {
    path.as_ref().is_some_and(|p| p.0.is_nonnegative())
}

/// Number of humps; 0 for NULL.
///
/// # Safety
/// `path` must be a valid handle or NULL.
#[no_mangle]
pub unsafe extern "C" fn kapath_path_hump_count(path: *const KapathPath) -> u64 {
    path.as_ref().map_or(0, |p| p.0.humps().len() as u64)
}

/// Number of peaks; 0 for NULL.
///
/// # Safety
/// `path` must be a valid handle or NULL.
#[no_mangle]
pub unsafe extern "C" fn kapath_path_peak_count(path: *const KapathPath) -> u64 {
    path.as_ref().map_or(0, |p| p.0.peaks().len() as u64)
}

/// Applies the forward bijection to the hump starting at step
/// `hump_up_index`, colored by `color`. Writes the image path and, when
/// `out_case` is non-NULL, the assembly case (1, 2 or 3).
///
/// # Safety
/// `path` must be a valid handle, `out` writable; the caller owns the new
/// handle.
#[no_mangle]
pub unsafe extern "C" fn kapath_phi(
    path: *const KapathPath,
    hump_up_index: u64,
    color: u32,
    out: *mut *mut KapathPath,
    out_case: *mut u32,
) -> KapathStatus {
    let Some(p) = path.as_ref() else {
        return KapathStatus::NullPointer;
    };
    if out.is_null() {
        return KapathStatus::NullPointer;
    }
    guarded(|| {
        let colored =
            match ColoredHumpPath::from_up_index(p.0.clone(), hump_up_index as usize, color) {
                Ok(c) => c,
                Err(_) => return KapathStatus::MalformedColoredPath,
            };
        match phi(&colored) {
            Ok(image) => {
                *out = Box::into_raw(Box::new(KapathPath(image)));
                if !out_case.is_null() {
                    *out_case = case_number(case_of_color(color, p.0.params().k));
                }
                KapathStatus::Ok
            }
            Err(e) => bijection_error_status(&e),
        }
    })
}

/// Applies the inverse bijection to a super path with at least one up step.
/// Writes the colored path and, through the optional out-pointers, the
/// recovered hump's up-step index, its color, and the case.
///
/// # Safety
/// `path` must be a valid handle, `out` writable; the caller owns the new
/// handle.
#[no_mangle]
pub unsafe extern "C" fn kapath_psi(
    path: *const KapathPath,
    out: *mut *mut KapathPath,
    out_hump_up_index: *mut u64,
    out_color: *mut u32,
    out_case: *mut u32,
) -> KapathStatus {
    let Some(p) = path.as_ref() else {
        return KapathStatus::NullPointer;
    };
    if out.is_null() {
        return KapathStatus::NullPointer;
    }
    guarded(|| match psi(&p.0) {
        Ok(colored) => {
            if !out_hump_up_index.is_null() {
                *out_hump_up_index = colored.hump().up_index as u64;
            }
            if !out_color.is_null() {
                *out_color = colored.color();
            }
            if !out_case.is_null() {
                *out_case = case_number(case_of_color(colored.color(), p.0.params().k));
            }
            *out = Box::into_raw(Box::new(KapathPath(colored.path().clone())));
            KapathStatus::Ok
        }
        Err(e) => bijection_error_status(&e),
    })
}

/// Number of super (k,a)-paths of order `n` as a decimal string
/// (0 for negative `n`).
///
/// # Safety
/// `out` must be writable; free the string with [`kapath_string_free`].
#[no_mangle]
pub unsafe extern "C" fn kapath_count_super(
    n: i64,
    k: u32,
    a: u32,
    out: *mut *mut c_char,
) -> KapathStatus {
    if out.is_null() {
        return KapathStatus::NullPointer;
    }
    guarded(|| {
        let params = match params_of(k, a) {
            Ok(p) => p,
            Err(status) => return status,
        };
        *out = export_string(count_super(n, params).to_string());
        KapathStatus::Ok
    })
}

/// `C(n-1, m) * C(kn-1, m-1)` as a decimal string; requires `n, m >= 1`.
///
/// # Safety
/// `out` must be writable; free the string with [`kapath_string_free`].
#[no_mangle]
pub unsafe extern "C" fn kapath_count_suu(
    n: u64,
    k: u32,
    m: u64,
    out: *mut *mut c_char,
) -> KapathStatus {
    closed_form(out, n, k, m, |n, k, m| Ok(count_suu(n, k, m)))
}

/// `C(n-1, m-1) * C(kn-1, m-1)` as a decimal string; requires `n, m >= 1`.
///
/// # Safety
/// `out` must be writable; free the string with [`kapath_string_free`].
#[no_mangle]
pub unsafe extern "C" fn kapath_count_sud(
    n: u64,
    k: u32,
    m: u64,
    out: *mut *mut c_char,
) -> KapathStatus {
    closed_form(out, n, k, m, |n, k, m| Ok(count_sud(n, k, m)))
}

/// `(1/n) C(n, m) C(kn, m-1)` as a decimal string; requires `n, m >= 1`.
///
/// # Safety
/// `out` must be writable; free the string with [`kapath_string_free`].
#[no_mangle]
pub unsafe extern "C" fn kapath_count_kary_peak_paths(
    n: u64,
    k: u32,
    m: u64,
    out: *mut *mut c_char,
) -> KapathStatus {
    closed_form(out, n, k, m, |n, k, m| {
        count_kary_peak_paths(n, k, m).map_err(|_| KapathStatus::NonIntegerResult)
    })
}

unsafe fn closed_form(
    out: *mut *mut c_char,
    n: u64,
    k: u32,
    m: u64,
    f: impl Fn(u64, u32, u64) -> Result<BigUint, KapathStatus>,
) -> KapathStatus {
    if out.is_null() {
        return KapathStatus::NullPointer;
    }
    if n < 1 || m < 1 || k < 1 {
        return KapathStatus::InvalidParams;
    }
    guarded(|| match f(n, k, m) {
        Ok(value) => {
            *out = export_string(value.to_string());
            KapathStatus::Ok
        }
        Err(status) => status,
    })
}

/// Verifies one identity cell and writes the report as a JSON string.
///
/// Grid claims (EQ4..THM1, ROUNDTRIP) read `n`, `k`, `a` and ignore `m`;
/// peak-count claims (C1, C2, NARAYANA) read `n`, `k`, `m` and ignore `a`.
/// Cells whose super-path universe exceeds `budget` (0 means the default of
/// 10^7) are refused with `BudgetExceeded`.
///
/// # Safety
/// `out_report_json` must be writable; free the string with
/// [`kapath_string_free`].
#[no_mangle]
pub unsafe extern "C" fn kapath_verify_claim(
    claim: KapathClaim,
    n: u64,
    k: u32,
    a: u32,
    m: u64,
    budget: u64,
    out_report_json: *mut *mut c_char,
) -> KapathStatus {
    if out_report_json.is_null() {
        return KapathStatus::NullPointer;
    }
    let budget = if budget == 0 { 10_000_000 } else { budget };
    guarded(|| {
        let claim_id = match claim {
            KapathClaim::Eq4 => ClaimId::Eq4,
            KapathClaim::Eq5 => ClaimId::Eq5,
            KapathClaim::Eq6 => ClaimId::Eq6,
            KapathClaim::Eq7 => ClaimId::Eq7,
            KapathClaim::Thm1 => ClaimId::Thm1,
            KapathClaim::C1 => ClaimId::C1,
            KapathClaim::C2 => ClaimId::C2,
            KapathClaim::Narayana => ClaimId::Narayana,
            KapathClaim::Roundtrip => ClaimId::Roundtrip,
        };
        let report = if claim_id.is_peak_count_claim() {
            if n < 1 || m < 1 {
                return KapathStatus::InvalidParams;
            }
            let order = (u64::from(k) + 1) * n;
            let kary = match params_of(k, 0) {
                Ok(p) => p,
                Err(status) => return status,
            };
            if count_super(order as i64, kary) > BigUint::from(budget) {
                return KapathStatus::BudgetExceeded;
            }
            match claim_id {
                ClaimId::C1 => verify_suu(n, k, m),
                ClaimId::C2 => verify_sud(n, k, m),
                _ => verify_kary_peaks(n, k, m),
            }
        } else {
            let params = match params_of(k, a) {
                Ok(p) => p,
                Err(status) => return status,
            };
            if count_super(n as i64, params) > BigUint::from(budget) {
                return KapathStatus::BudgetExceeded;
            }
            match claim_id {
                ClaimId::Eq4 => verify_hump_identity(n, params),
                ClaimId::Eq5 => verify_peak_identity(n, params),
                ClaimId::Eq6 => verify_image_hump(n, params),
                ClaimId::Eq7 => verify_image_peak(n, params),
                ClaimId::Thm1 => verify_theorem1_refinement(n, params),
                _ => verify_bijection(n, params),
            }
        };
        *out_report_json =
            export_string(serde_json::to_string(&report).expect("report serializes"));
        KapathStatus::Ok
    })
}
