//! C ABI over the pancyc library.
//!
//! Instances cross the boundary as the text format, certificates as JSON, and
//! tournaments live behind an opaque handle. Every fallible call returns a
//! [`pancyc_status`]; on failure a human-readable detail is kept in a
//! thread-local slot readable through [`pancyc_last_error`] until the next
//! failing call on the same thread. Strings handed out by this library must
//! be released with [`pancyc_string_free`], handles with
//! [`pancyc_tournament_free`].
//!
//! The committed header `include/pancyc.h` is generated with cbindgen; see
//! the README for the regeneration command.

#![allow(non_camel_case_types)]
#![allow(clippy::missing_safety_doc)]

use std::cell::RefCell;
use std::ffi::{CStr, CString};
use std::os::raw::c_char;
use std::ptr;

use pancyc::construct::{two_pancyclic_arcs, ConstructError};
use pancyc::oracle::{cycle_lengths_through_arc, full_spectrum_arcs};
use pancyc::tournament::{Arc, MultipartiteTournament};
use pancyc::witness::{certificate_from_json, certificate_to_json, verify_certificate};

/// Opaque tournament handle.
pub struct pancyc_tournament(MultipartiteTournament);

/// Status of a pancyc call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum pancyc_status {
    PANCYC_OK = 0,
    PANCYC_ERR_NULL_ARGUMENT = 1,
    PANCYC_ERR_INVALID_UTF8 = 2,
    PANCYC_ERR_PARSE = 3,
    /// Input violates a precondition (not strong, or fewer than three parts).
    PANCYC_ERR_PRECONDITION = 4,
    PANCYC_ERR_INVALID_CERTIFICATE = 5,
    PANCYC_ERR_ARC_NOT_PRESENT = 6,
    /// A guarantee failed internally; report this as a bug.
    PANCYC_ERR_INTERNAL = 7,
}

use pancyc_status::*;

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn fail(status: pancyc_status, detail: impl std::fmt::Display) -> pancyc_status {
    let message = CString::new(detail.to_string())
        .unwrap_or_else(|_| CString::new("error detail held a NUL byte").unwrap());
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(message));
    status
}

/// Detail message of the last failing call on this thread, or NULL. The
/// pointer stays valid until the next failing call on the same thread; do
/// not free it.
#[no_mangle]
pub extern "C" fn pancyc_last_error() -> *const c_char {
    LAST_ERROR.with(|slot| {
        slot.borrow()
            .as_ref()
            .map_or(ptr::null(), |msg| msg.as_ptr())
    })
}

unsafe fn utf8_arg<'a>(text: *const c_char) -> Result<&'a str, pancyc_status> {
    if text.is_null() {
        return Err(fail(PANCYC_ERR_NULL_ARGUMENT, "text argument is NULL"));
    }
    CStr::from_ptr(text)
        .to_str()
        .map_err(|e| fail(PANCYC_ERR_INVALID_UTF8, e))
}

unsafe fn handle_arg<'a>(
    t: *const pancyc_tournament,
) -> Result<&'a MultipartiteTournament, pancyc_status> {
    if t.is_null() {
        return Err(fail(PANCYC_ERR_NULL_ARGUMENT, "tournament handle is NULL"));
    }
    Ok(&(*t).0)
}

fn give_string(text: String, out: *mut *mut c_char) -> pancyc_status {
    match CString::new(text) {
        Ok(s) => {
            unsafe { *out = s.into_raw() };
            PANCYC_OK
        }
        Err(e) => fail(PANCYC_ERR_INTERNAL, e),
    }
}

/// Parse the instance text format into a new handle.
#[no_mangle]
pub unsafe extern "C" fn pancyc_parse(
    text: *const c_char,
    out: *mut *mut pancyc_tournament,
) -> pancyc_status {
    if out.is_null() {
        return fail(PANCYC_ERR_NULL_ARGUMENT, "output pointer is NULL");
    }
    *out = ptr::null_mut();
    let text = match utf8_arg(text) {
        Ok(t) => t,
        Err(status) => return status,
    };
    match text.parse::<MultipartiteTournament>() {
        Ok(d) => {
            *out = Box::into_raw(Box::new(pancyc_tournament(d)));
            PANCYC_OK
        }
        Err(e) => fail(PANCYC_ERR_PARSE, e),
    }
}

/// Release a handle. NULL is a no-op.
#[no_mangle]
pub unsafe extern "C" fn pancyc_tournament_free(t: *mut pancyc_tournament) {
    if !t.is_null() {
        drop(Box::from_raw(t));
    }
}

/// Release a string handed out by this library. NULL is a no-op.
#[no_mangle]
pub unsafe extern "C" fn pancyc_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Canonical instance text of the handle.
#[no_mangle]
pub unsafe extern "C" fn pancyc_serialize(
    t: *const pancyc_tournament,
    out: *mut *mut c_char,
) -> pancyc_status {
    if out.is_null() {
        return fail(PANCYC_ERR_NULL_ARGUMENT, "output pointer is NULL");
    }
    let d = match handle_arg(t) {
        Ok(d) => d,
        Err(status) => return status,
    };
    give_string(d.to_string(), out)
}

/// Part count; 0 for a NULL handle.
#[no_mangle]
pub unsafe extern "C" fn pancyc_part_count(t: *const pancyc_tournament) -> u32 {
    if t.is_null() {
        return 0;
    }
    (*t).0.part_count() as u32
}

/// Vertex count; 0 for a NULL handle.
#[no_mangle]
pub unsafe extern "C" fn pancyc_vertex_count(t: *const pancyc_tournament) -> u32 {
    if t.is_null() {
        return 0;
    }
    (*t).0.vertex_count() as u32
}

#[no_mangle]
pub unsafe extern "C" fn pancyc_is_strong(
    t: *const pancyc_tournament,
    out: *mut bool,
) -> pancyc_status {
    if out.is_null() {
        return fail(PANCYC_ERR_NULL_ARGUMENT, "output pointer is NULL");
    }
    let d = match handle_arg(t) {
        Ok(d) => d,
        Err(status) => return status,
    };
    *out = d.is_strong();
    PANCYC_OK
}

/// Build a two-arc certificate and hand it back as JSON. The certificate is
/// re-verified before it leaves; a verification failure is an internal error.
#[no_mangle]
pub unsafe extern "C" fn pancyc_solve(
    t: *const pancyc_tournament,
    out_json: *mut *mut c_char,
) -> pancyc_status {
    if out_json.is_null() {
        return fail(PANCYC_ERR_NULL_ARGUMENT, "output pointer is NULL");
    }
    *out_json = ptr::null_mut();
    let d = match handle_arg(t) {
        Ok(d) => d,
        Err(status) => return status,
    };
    let cert = match two_pancyclic_arcs(d) {
        Ok(cert) => cert,
        Err(e @ (ConstructError::NotStrong | ConstructError::TooFewParts(_))) => {
            return fail(PANCYC_ERR_PRECONDITION, e);
        }
        Err(e) => return fail(PANCYC_ERR_INTERNAL, e),
    };
    if let Err(violations) = verify_certificate(d, &cert) {
        return fail(
            PANCYC_ERR_INTERNAL,
            format!("constructed certificate rejected: {} violation(s)", violations.len()),
        );
    }
    give_string(certificate_to_json(&cert), out_json)
}

/// Verify certificate JSON against the handle: PANCYC_OK when valid,
/// PANCYC_ERR_INVALID_CERTIFICATE when the verifier rejects it (details in
/// the last-error slot), PANCYC_ERR_PARSE when the JSON is malformed.
#[no_mangle]
pub unsafe extern "C" fn pancyc_verify(
    t: *const pancyc_tournament,
    cert_json: *const c_char,
) -> pancyc_status {
    let d = match handle_arg(t) {
        Ok(d) => d,
        Err(status) => return status,
    };
    let text = match utf8_arg(cert_json) {
        Ok(t) => t,
        Err(status) => return status,
    };
    let cert = match certificate_from_json(text) {
        Ok(c) => c,
        Err(e) => return fail(PANCYC_ERR_PARSE, e),
    };
    match verify_certificate(d, &cert) {
        Ok(()) => PANCYC_OK,
        Err(violations) => {
            let detail = violations
                .iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join("; ");
            fail(PANCYC_ERR_INVALID_CERTIFICATE, detail)
        }
    }
}

/// Cycle-length spectrum through the arc tail->head as a bitmask: bit L is
/// set iff a simple L-cycle through the arc exists, for L in 3..=min(max_len,
/// vertex count, 63).
#[no_mangle]
pub unsafe extern "C" fn pancyc_arc_spectrum(
    t: *const pancyc_tournament,
    tail: u32,
    head: u32,
    max_len: u32,
    out_mask: *mut u64,
) -> pancyc_status {
    if out_mask.is_null() {
        return fail(PANCYC_ERR_NULL_ARGUMENT, "output pointer is NULL");
    }
    *out_mask = 0;
    let d = match handle_arg(t) {
        Ok(d) => d,
        Err(status) => return status,
    };
    let arc = Arc::new(tail as usize, head as usize);
    if !d.has_arc(arc) {
        return fail(PANCYC_ERR_ARC_NOT_PRESENT, format!("arc {arc} is not present"));
    }
    let bound = (max_len as usize).min(63);
    match cycle_lengths_through_arc(d, arc, bound) {
        Ok(lengths) => {
            let mut mask = 0u64;
            for len in lengths {
                mask |= 1 << len;
            }
            *out_mask = mask;
            PANCYC_OK
        }
        Err(e) => fail(PANCYC_ERR_INTERNAL, e),
    }
}

/// Number of arcs whose spectrum covers every length in 3..=c.
#[no_mangle]
pub unsafe extern "C" fn pancyc_full_spectrum_count(
    t: *const pancyc_tournament,
    out: *mut u32,
) -> pancyc_status {
    if out.is_null() {
        return fail(PANCYC_ERR_NULL_ARGUMENT, "output pointer is NULL");
    }
    let d = match handle_arg(t) {
        Ok(d) => d,
        Err(status) => return status,
    };
    *out = full_spectrum_arcs(d).len() as u32;
    PANCYC_OK
}
