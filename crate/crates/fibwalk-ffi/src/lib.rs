//! C ABI surface for the fibwalk toolkit.
//!
//! Conventions: every fallible function returns a `FibwalkStatus`; outputs
//! go through pointer parameters. Strings returned by the library are
//! heap-allocated and must be released with [`fibwalk_string_free`];
//! automata are opaque handles released with [`fibwalk_automaton_free`].

use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::sync::Arc;

use fibwalk::automata::{serialize, set_state_budget, to_dot};
use fibwalk::logic::eval_closed;
use fibwalk::numeration::{
    cg_decode, cg_encode, floor_inv_phi, floor_phi, floor_phi2, shift_cg2, shift_f, shift_f2,
    zeck_decode, zeck_encode, CgWord, ZeckWord,
};
use fibwalk::relations::{builtin, NamedAutomaton};

/// Result of every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FibwalkStatus {
    Ok = 0,
    /// A pointer argument was null or an enum value was out of range.
    InvalidArgument = 1,
    /// A digit word failed validation for the requested system.
    InvalidWord = 2,
    /// No builtin automaton has the requested name.
    UnknownName = 3,
    /// A formula failed to parse or evaluate.
    EvalError = 4,
    /// An internal invariant failed; the library state is still usable.
    Internal = 5,
}

/// Numeration system selector.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FibwalkSystem {
    Zeck = 0,
    Cg = 1,
}

/// Shift operator selector.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FibwalkShift {
    Single = 0,
    Double = 1,
    CgDouble = 2,
}

/// Opaque handle to a synchronized relation automaton.
pub struct FibwalkAutomaton {
    inner: Arc<NamedAutomaton>,
}

fn guard(f: impl FnOnce() -> FibwalkStatus) -> FibwalkStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(status) => status,
        Err(_) => FibwalkStatus::Internal,
    }
}

unsafe fn read_str<'a>(ptr: *const c_char) -> Option<&'a str> {
    if ptr.is_null() {
        return None;
    }
    CStr::from_ptr(ptr).to_str().ok()
}

fn give_string(s: String, out: *mut *mut c_char) -> FibwalkStatus {
    match CString::new(s) {
        Ok(c) => {
            unsafe { *out = c.into_raw() };
            FibwalkStatus::Ok
        }
        Err(_) => FibwalkStatus::Internal,
    }
}

/// Encode `n`, least significant digit first. The result must be freed
/// with `fibwalk_string_free`.
#[no_mangle]
pub extern "C" fn fibwalk_encode(
    system: FibwalkSystem,
    n: u64,
    out: *mut *mut c_char,
) -> FibwalkStatus {
    if out.is_null() {
        return FibwalkStatus::InvalidArgument;
    }
    guard(|| {
        let digits = match system {
            FibwalkSystem::Zeck => zeck_encode(n).digits().to_vec(),
            FibwalkSystem::Cg => cg_encode(n).digits().to_vec(),
        };
        let text = if digits.is_empty() {
            "0".to_string()
        } else {
            digits.iter().map(|d| char::from(b'0' + d)).collect()
        };
        give_string(text, out)
    })
}

/// Decode an LSD-first digit word.
#[no_mangle]
pub extern "C" fn fibwalk_decode(
    system: FibwalkSystem,
    word: *const c_char,
    out: *mut u64,
) -> FibwalkStatus {
    guard(|| {
        let (Some(word), false) = (unsafe { read_str(word) }, out.is_null()) else {
            return FibwalkStatus::InvalidArgument;
        };
        let value = match system {
            FibwalkSystem::Zeck => ZeckWord::parse(word).map(|w| zeck_decode(&w)),
            FibwalkSystem::Cg => CgWord::parse(word).map(|w| cg_decode(&w)),
        };
        match value {
            Ok(v) => {
                unsafe { *out = v };
                FibwalkStatus::Ok
            }
            Err(_) => FibwalkStatus::InvalidWord,
        }
    })
}

/// Apply a shift operator.
#[no_mangle]
pub extern "C" fn fibwalk_shift(op: FibwalkShift, n: u64, out: *mut u64) -> FibwalkStatus {
    if out.is_null() {
        return FibwalkStatus::InvalidArgument;
    }
    guard(|| {
        let v = match op {
            FibwalkShift::Single => shift_f(n),
            FibwalkShift::Double => shift_f2(n),
            FibwalkShift::CgDouble => shift_cg2(n),
        };
        unsafe { *out = v };
        FibwalkStatus::Ok
    })
}

/// `⌊nφ⌋`.
#[no_mangle]
pub extern "C" fn fibwalk_floor_phi(n: u64) -> u64 {
    floor_phi(n)
}

/// `⌊nφ²⌋`.
#[no_mangle]
pub extern "C" fn fibwalk_floor_phi2(n: u64) -> u64 {
    floor_phi2(n)
}

/// `⌊n/φ⌋`.
#[no_mangle]
pub extern "C" fn fibwalk_floor_inv_phi(n: u64) -> u64 {
    floor_inv_phi(n)
}

/// Cap the number of states automaton constructions may allocate.
#[no_mangle]
pub extern "C" fn fibwalk_set_state_budget(limit: usize) {
    set_state_budget(limit);
}

/// Look up a builtin automaton by name. The handle must be freed with
/// `fibwalk_automaton_free`.
#[no_mangle]
pub extern "C" fn fibwalk_builtin(
    name: *const c_char,
    out: *mut *mut FibwalkAutomaton,
) -> FibwalkStatus {
    guard(|| {
        let (Some(name), false) = (unsafe { read_str(name) }, out.is_null()) else {
            return FibwalkStatus::InvalidArgument;
        };
        match builtin(name) {
            Ok(inner) => {
                let handle = Box::new(FibwalkAutomaton { inner });
                unsafe { *out = Box::into_raw(handle) };
                FibwalkStatus::Ok
            }
            Err(_) => FibwalkStatus::UnknownName,
        }
    })
}

/// Number of tracks the automaton reads.
#[no_mangle]
pub extern "C" fn fibwalk_automaton_tracks(auto: *const FibwalkAutomaton) -> usize {
    if auto.is_null() {
        return 0;
    }
    unsafe { &*auto }.inner.systems.len()
}

/// Decide whether a tuple of integers is in the relation. `values` must
/// hold exactly one integer per track.
#[no_mangle]
pub extern "C" fn fibwalk_automaton_member(
    auto: *const FibwalkAutomaton,
    values: *const u64,
    len: usize,
    out: *mut bool,
) -> FibwalkStatus {
    guard(|| {
        if auto.is_null() || values.is_null() || out.is_null() {
            return FibwalkStatus::InvalidArgument;
        }
        let auto = unsafe { &*auto };
        if len != auto.inner.systems.len() {
            return FibwalkStatus::InvalidArgument;
        }
        let values = unsafe { std::slice::from_raw_parts(values, len) };
        let member = auto.inner.dfa.member_int(values, &auto.inner.systems);
        unsafe { *out = member };
        FibwalkStatus::Ok
    })
}

/// Serialize the automaton to the text format. Free with
/// `fibwalk_string_free`.
#[no_mangle]
pub extern "C" fn fibwalk_automaton_serialize(
    auto: *const FibwalkAutomaton,
    out: *mut *mut c_char,
) -> FibwalkStatus {
    guard(|| {
        if auto.is_null() || out.is_null() {
            return FibwalkStatus::InvalidArgument;
        }
        give_string(serialize(&unsafe { &*auto }.inner.dfa), out)
    })
}

/// Render the automaton as a DOT graph. Free with `fibwalk_string_free`.
#[no_mangle]
pub extern "C" fn fibwalk_automaton_dot(
    auto: *const FibwalkAutomaton,
    out: *mut *mut c_char,
) -> FibwalkStatus {
    guard(|| {
        if auto.is_null() || out.is_null() {
            return FibwalkStatus::InvalidArgument;
        }
        give_string(to_dot(&unsafe { &*auto }.inner.dfa), out)
    })
}

/// Release an automaton handle. Null is accepted and ignored.
#[no_mangle]
pub extern "C" fn fibwalk_automaton_free(auto: *mut FibwalkAutomaton) {
    if !auto.is_null() {
        drop(unsafe { Box::from_raw(auto) });
    }
}

/// Decide a closed formula against the builtin environment; `out` gets the
/// truth value.
#[no_mangle]
pub extern "C" fn fibwalk_eval(formula: *const c_char, out: *mut bool) -> FibwalkStatus {
    guard(|| {
        let (Some(src), false) = (unsafe { read_str(formula) }, out.is_null()) else {
            return FibwalkStatus::InvalidArgument;
        };
        let env = match fibwalk::relations::builtin_env() {
            Ok(env) => env,
            Err(_) => return FibwalkStatus::Internal,
        };
        match eval_closed(src, &env) {
            Ok(truth) => {
                unsafe { *out = truth };
                FibwalkStatus::Ok
            }
            Err(_) => FibwalkStatus::EvalError,
        }
    })
}

/// Release a string returned by this library. Null is accepted.
#[no_mangle]
pub extern "C" fn fibwalk_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(unsafe { CString::from_raw(s) });
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::ptr;

    fn take_string(ptr: *mut c_char) -> String {
        let s = unsafe { CStr::from_ptr(ptr) }.to_str().unwrap().to_string();
        fibwalk_string_free(ptr);
        s
    }

    #[test]
    fn codec_roundtrip_through_the_abi() {
        let mut text = ptr::null_mut();
        assert_eq!(
            fibwalk_encode(FibwalkSystem::Zeck, 17, &mut text),
            FibwalkStatus::Ok
        );
        let word = take_string(text);
        assert_eq!(word, "101001");
        let c = CString::new(word).unwrap();
        let mut back = 0u64;
        assert_eq!(
            fibwalk_decode(FibwalkSystem::Zeck, c.as_ptr(), &mut back),
            FibwalkStatus::Ok
        );
        assert_eq!(back, 17);
    }

    #[test]
    fn invalid_word_is_reported() {
        let c = CString::new("11").unwrap();
        let mut v = 0u64;
        assert_eq!(
            fibwalk_decode(FibwalkSystem::Zeck, c.as_ptr(), &mut v),
            FibwalkStatus::InvalidWord
        );
        assert_eq!(
            fibwalk_decode(FibwalkSystem::Zeck, ptr::null(), &mut v),
            FibwalkStatus::InvalidArgument
        );
    }

    #[test]
    fn builtin_handles() {
        let name = CString::new("fibcg").unwrap();
        let mut auto = ptr::null_mut();
        assert_eq!(fibwalk_builtin(name.as_ptr(), &mut auto), FibwalkStatus::Ok);
        assert_eq!(fibwalk_automaton_tracks(auto), 2);
        let mut member = false;
        assert_eq!(
            fibwalk_automaton_member(auto, [17u64, 17].as_ptr(), 2, &mut member),
            FibwalkStatus::Ok
        );
        assert!(member);
        assert_eq!(
            fibwalk_automaton_member(auto, [17u64, 18].as_ptr(), 2, &mut member),
            FibwalkStatus::Ok
        );
        assert!(!member);
        let mut text = ptr::null_mut();
        assert_eq!(
            fibwalk_automaton_serialize(auto, &mut text),
            FibwalkStatus::Ok
        );
        assert!(take_string(text).starts_with("tracks"));
        fibwalk_automaton_free(auto);

        let bad = CString::new("nope").unwrap();
        let mut auto = ptr::null_mut();
        assert_eq!(
            fibwalk_builtin(bad.as_ptr(), &mut auto),
            FibwalkStatus::UnknownName
        );
    }

    #[test]
    fn eval_through_the_abi() {
        let src = CString::new("Ax Ey $fibshift(x,y)").unwrap();
        let mut truth = false;
        assert_eq!(fibwalk_eval(src.as_ptr(), &mut truth), FibwalkStatus::Ok);
        assert!(truth);
        let bad = CString::new("Ex x +").unwrap();
        assert_eq!(
            fibwalk_eval(bad.as_ptr(), &mut truth),
            FibwalkStatus::EvalError
        );
    }

    #[test]
    fn floors_match_the_library() {
        for n in 0..200 {
            assert_eq!(fibwalk_floor_phi(n), floor_phi(n));
            assert_eq!(fibwalk_floor_inv_phi(n), floor_inv_phi(n));
        }
    }
}
