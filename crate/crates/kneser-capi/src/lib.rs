//! C ABI for the kneser library.
//!
//! Point configurations cross the boundary as opaque `KneserConfig` handles;
//! structured results come back as JSON strings allocated by Rust. Every
//! fallible entry point returns a [`KneserStatus`] and stores a message
//! retrievable with [`kneser_last_error`] on failure. Strings handed to the
//! caller must be released with [`kneser_string_free`], handles with
//! [`kneser_config_free`].

use std::cell::RefCell;
use std::ffi::{CStr, CString};
use std::os::raw::c_char;
use std::str::FromStr;

use kneser::cyclic::{self, ZetaMethod, DEFAULT_SIGN_ORACLE_CAP};
use kneser::parity::{self, ParamTriple};
use kneser::transversal::is_complete_kneser_transversal;
use kneser::{Error, PointConfig};

/// Opaque handle around a point configuration.
pub struct KneserConfig {
    inner: PointConfig,
}

/// Result code returned by every fallible entry point. `OK` is zero, so the
/// type can be tested like an error flag.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum KneserStatus {
    Ok = 0,
    /// A required pointer argument was null.
    NullPointer = 1,
    /// A string argument was not valid UTF-8.
    Utf8 = 2,
    /// Input text could not be parsed (JSON, rationals, method names).
    Parse = 3,
    /// Structurally valid input outside the function's domain
    /// (bad labels, parameter ranges, degenerate configurations).
    Domain = 4,
    /// Invariant violation inside the library.
    Internal = 5,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg).unwrap_or_else(|_| CString::new("invalid error text").unwrap());
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(c));
}

fn fail(e: Error) -> KneserStatus {
    let status = match &e {
        Error::Parse(_) => KneserStatus::Parse,
        Error::Internal(_) => KneserStatus::Internal,
        _ => KneserStatus::Domain,
    };
    set_error(e.to_string());
    status
}

fn fail_null(what: &str) -> KneserStatus {
    set_error(format!("null pointer: {what}"));
    KneserStatus::NullPointer
}

/// Message for the most recent failure on this thread, or null if no call
/// has failed yet. The pointer stays valid until the next failing call on
/// the same thread; do not free it.
#[no_mangle]
pub extern "C" fn kneser_last_error() -> *const c_char {
    LAST_ERROR.with(|slot| {
        slot.borrow()
            .as_ref()
            .map_or(std::ptr::null(), |c| c.as_ptr())
    })
}

unsafe fn read_str<'a>(ptr: *const c_char, what: &str) -> Result<&'a str, KneserStatus> {
    if ptr.is_null() {
        return Err(fail_null(what));
    }
    CStr::from_ptr(ptr).to_str().map_err(|_| {
        set_error(format!("{what} is not valid UTF-8"));
        KneserStatus::Utf8
    })
}

unsafe fn give_string(s: String, out: *mut *mut c_char) -> KneserStatus {
    match CString::new(s) {
        Ok(c) => {
            *out = c.into_raw();
            KneserStatus::Ok
        }
        Err(_) => {
            set_error("output contains an interior NUL byte".to_string());
            KneserStatus::Internal
        }
    }
}

/// Releases a string allocated by this library. Null is ignored.
///
/// # Safety
/// `s` must be a pointer previously returned through an `out_json`
/// parameter of this library and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn kneser_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses a point configuration from its JSON form
/// (`{"dim": d, "points": [["x1", "x2", ...], ...]}`, coordinates as exact
/// rational strings or integers). Duplicate points are rejected.
///
/// # Safety
/// `json` must be a valid NUL-terminated string and `out` a valid location
/// to store the new handle.
#[no_mangle]
pub unsafe extern "C" fn kneser_config_from_json(
    json: *const c_char,
    out: *mut *mut KneserConfig,
) -> KneserStatus {
    if out.is_null() {
        return fail_null("out");
    }
    let text = match read_str(json, "json") {
        Ok(t) => t,
        Err(status) => return status,
    };
    match PointConfig::from_json(text) {
        Ok(inner) => {
            *out = Box::into_raw(Box::new(KneserConfig { inner }));
            KneserStatus::Ok
        }
        Err(e) => fail(e),
    }
}

/// Builds the configuration of `n` moment-curve points
/// gamma(t) = (t, t^2, ..., t^d) at t = 1..n.
///
/// # Safety
/// `out` must be a valid location to store the new handle.
#[no_mangle]
pub unsafe extern "C" fn kneser_moment_curve(
    n: usize,
    d: usize,
    out: *mut *mut KneserConfig,
) -> KneserStatus {
    if out.is_null() {
        return fail_null("out");
    }
    match PointConfig::moment_curve(n, d, None) {
        Ok(inner) => {
            *out = Box::into_raw(Box::new(KneserConfig { inner }));
            KneserStatus::Ok
        }
        Err(e) => fail(e),
    }
}

/// Releases a configuration handle. Null is ignored.
///
/// # Safety
/// `config` must come from this library and not have been freed already.
#[no_mangle]
pub unsafe extern "C" fn kneser_config_free(config: *mut KneserConfig) {
    if !config.is_null() {
        drop(Box::from_raw(config));
    }
}

/// Number of points, or 0 for a null handle.
///
/// # Safety
/// `config`, when non-null, must be a live handle from this library.
#[no_mangle]
pub unsafe extern "C" fn kneser_config_len(config: *const KneserConfig) -> usize {
    config.as_ref().map_or(0, |c| c.inner.len())
}

/// Ambient dimension, or 0 for a null handle.
///
/// # Safety
/// `config`, when non-null, must be a live handle from this library.
#[no_mangle]
pub unsafe extern "C" fn kneser_config_dim(config: *const KneserConfig) -> usize {
    config.as_ref().map_or(0, |c| c.inner.dim())
}

/// Serializes a configuration back to the JSON form accepted by
/// [`kneser_config_from_json`].
///
/// # Safety
/// `config` must be a live handle; `out_json` a valid output location.
#[no_mangle]
pub unsafe extern "C" fn kneser_config_to_json(
    config: *const KneserConfig,
    out_json: *mut *mut c_char,
) -> KneserStatus {
    if out_json.is_null() {
        return fail_null("out_json");
    }
    let Some(cfg) = config.as_ref() else {
        return fail_null("config");
    };
    give_string(cfg.inner.to_json(), out_json)
}

/// Whether every min(n, d+1)-subset of the configuration is affinely
/// independent.
///
/// # Safety
/// `config` must be a live handle; `out` a valid output location.
#[no_mangle]
pub unsafe extern "C" fn kneser_general_position(
    config: *const KneserConfig,
    out: *mut bool,
) -> KneserStatus {
    if out.is_null() {
        return fail_null("out");
    }
    let Some(cfg) = config.as_ref() else {
        return fail_null("config");
    };
    *out = cfg.inner.is_general_position();
    KneserStatus::Ok
}

/// Radon partition of a configuration of exactly d+2 points. The result
/// JSON holds the partition (1-based labels, exact coefficients) and the
/// common point of the two hulls:
/// `{"partition": {"positive": [...], "negative": [...],
/// "coefficients": {...}}, "radon_point": [...]}`.
///
/// # Safety
/// `config` must be a live handle; `out_json` a valid output location.
#[no_mangle]
pub unsafe extern "C" fn kneser_radon_json(
    config: *const KneserConfig,
    out_json: *mut *mut c_char,
) -> KneserStatus {
    if out_json.is_null() {
        return fail_null("out_json");
    }
    let Some(cfg) = config.as_ref() else {
        return fail_null("config");
    };
    let partition = match kneser::radon::radon_partition(&cfg.inner) {
        Ok(p) => p,
        Err(e) => return fail(e),
    };
    let point: Vec<String> = kneser::radon::radon_point(&cfg.inner, &partition)
        .iter()
        .map(kneser::rational::format_rational)
        .collect();
    let doc = serde_json::json!({
        "partition": partition.to_json(),
        "radon_point": point,
    });
    give_string(doc.to_string(), out_json)
}

/// Tests whether aff(T) meets the convex hull of every k-subset of the
/// configuration. `t_indices` are 1-based point labels, `t_len` of them.
/// The certificate JSON records `verified` and, on failure, the
/// lexicographically first failing k-set.
///
/// # Safety
/// `config` must be a live handle, `t_indices` must point to `t_len`
/// readable entries, and `out_json` must be a valid output location.
#[no_mangle]
pub unsafe extern "C" fn kneser_check_transversal_json(
    config: *const KneserConfig,
    t_indices: *const usize,
    t_len: usize,
    k: usize,
    out_json: *mut *mut c_char,
) -> KneserStatus {
    if out_json.is_null() {
        return fail_null("out_json");
    }
    let Some(cfg) = config.as_ref() else {
        return fail_null("config");
    };
    if t_indices.is_null() {
        return fail_null("t_indices");
    }
    let t: &[usize] = std::slice::from_raw_parts(t_indices, t_len);
    match is_complete_kneser_transversal(&cfg.inner, t, k) {
        Ok(cert) => give_string(cert.to_json().to_string(), out_json),
        Err(e) => fail(e),
    }
}

fn triple(k: usize, d: usize, lambda: usize) -> Result<ParamTriple, KneserStatus> {
    ParamTriple::new(k, d, lambda).map_err(fail)
}

/// Largest number of cyclic-polytope vertices for which some vertex
/// configuration admits a complete Kneser transversal for k-sets, searched
/// exhaustively in the non-trivial range (lambda - 1 < ceil(d/2)); one more
/// vertex makes every configuration fail. `method` is one of
/// "gap-optimizer", "sign-oracle", "both-agree", or null for "both-agree";
/// `oracle_cap` bounds the point count the sign oracle will enumerate
/// (0 selects the default of 24). Result JSON:
/// `{"k", "d", "lambda", "zeta", "witness_gaps", "method", "z_lower",
/// "z_upper"}`.
///
/// # Safety
/// `method`, when non-null, must be a valid NUL-terminated string;
/// `out_json` must be a valid output location.
#[no_mangle]
pub unsafe extern "C" fn kneser_zeta_json(
    k: usize,
    d: usize,
    lambda: usize,
    method: *const c_char,
    oracle_cap: usize,
    out_json: *mut *mut c_char,
) -> KneserStatus {
    if out_json.is_null() {
        return fail_null("out_json");
    }
    let method = if method.is_null() {
        ZetaMethod::BothAgree
    } else {
        let name = match read_str(method, "method") {
            Ok(t) => t,
            Err(status) => return status,
        };
        match ZetaMethod::from_str(name) {
            Ok(m) => m,
            Err(e) => return fail(e),
        }
    };
    let cap = if oracle_cap == 0 {
        DEFAULT_SIGN_ORACLE_CAP
    } else {
        oracle_cap
    };
    let p = match triple(k, d, lambda) {
        Ok(p) => p,
        Err(status) => return status,
    };
    match cyclic::zeta(p, method, cap) {
        Ok(res) => give_string(res.to_json().to_string(), out_json),
        Err(e) => fail(e),
    }
}

/// zeta(k, d, lambda) = d - lambda + k in the trivial range
/// (lambda - 1 >= ceil(d/2)); fails outside it or when k <= lambda.
///
/// # Safety
/// `out` must be a valid output location.
#[no_mangle]
pub unsafe extern "C" fn kneser_zeta_trivial(
    k: usize,
    d: usize,
    lambda: usize,
    out: *mut usize,
) -> KneserStatus {
    if out.is_null() {
        return fail_null("out");
    }
    let p = match triple(k, d, lambda) {
        Ok(p) => p,
        Err(status) => return status,
    };
    match cyclic::zeta_trivial(p) {
        Ok(v) => {
            *out = v;
            KneserStatus::Ok
        }
        Err(e) => fail(e),
    }
}

/// Closed-form bounds z(k, d, lambda) <= zeta <= Z(k, d, lambda) for the
/// non-trivial range.
///
/// # Safety
/// `out_lower` and `out_upper` must be valid output locations.
#[no_mangle]
pub unsafe extern "C" fn kneser_z_bounds(
    k: usize,
    d: usize,
    lambda: usize,
    out_lower: *mut usize,
    out_upper: *mut usize,
) -> KneserStatus {
    if out_lower.is_null() {
        return fail_null("out_lower");
    }
    if out_upper.is_null() {
        return fail_null("out_upper");
    }
    let p = match triple(k, d, lambda) {
        Ok(p) => p,
        Err(status) => return status,
    };
    let lo = match parity::z_lower(p) {
        Ok(v) => v,
        Err(e) => return fail(e),
    };
    let hi = match parity::z_upper(p) {
        Ok(v) => v,
        Err(e) => return fail(e),
    };
    *out_lower = lo;
    *out_upper = hi;
    KneserStatus::Ok
}
