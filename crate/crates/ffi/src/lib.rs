//! C bindings for `kronlab`.
//!
//! Partitions and Laurent polynomials cross the boundary as opaque handles
//! owned by the caller and released with the matching `*_free` function.
//! Every fallible call returns a [`KronStatus`]; the message of the last
//! failure on the calling thread is available from
//! [`kronlab_last_error_message`]. Strings returned to C are released with
//! [`kronlab_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use kronlab::coefficients::{kronecker, reduced_kronecker, ReducedMethod};
use kronlab::stability::{abc_record, hook_stable_value, q_polynomial, AbcMethod, HookMethod, QVariant};
use kronlab::{KronError, LaurentPoly, Partition};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;

/// Result codes. `KRON_STATUS_OK` is zero; each engine error has its own code.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum KronStatus {
    Ok = 0,
    InvalidShape = 1,
    WeightMismatch = 2,
    NonTruncatable = 3,
    CapMismatch = 4,
    CapExceeded = 5,
    ClosedFormUnavailable = 6,
    LimitInfeasible = 7,
    OutOfRegion = 8,
    Parse = 9,
    Overflow = 10,
    NullPointer = 11,
    InvalidArgument = 12,
    Panic = 13,
}

/// Reduced coefficient methods.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum KronReducedMethod {
    Stabilize = 0,
    Brion = 1,
    ClosedForm = 2,
}

/// Hook-stable methods.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum KronHookMethod {
    Series = 0,
    Polynomial = 1,
    Limit = 2,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum KronAbcMethod {
    FromPolynomial = 0,
    FromSeries = 1,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum KronVariant {
    Row = 0,
    Col = 1,
}

/// `A`, `B` in the orders `(αβγ, βαγ, γαβ)`, and `C`.
#[repr(C)]
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct KronAbc {
    pub a: i64,
    pub b: [i64; 3],
    pub c: i64,
}

/// Opaque partition handle.
pub struct KronPartition(Partition);

/// Opaque Laurent polynomial handle.
pub struct KronPoly(LaurentPoly);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).expect("nul bytes removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(err: &KronError) -> KronStatus {
    match err {
        KronError::InvalidShape(_) => KronStatus::InvalidShape,
        KronError::WeightMismatch { .. } => KronStatus::WeightMismatch,
        KronError::NonTruncatable(_) => KronStatus::NonTruncatable,
        KronError::CapMismatch(..) => KronStatus::CapMismatch,
        KronError::CapExceeded { .. } => KronStatus::CapExceeded,
        KronError::ClosedFormUnavailable(..) => KronStatus::ClosedFormUnavailable,
        KronError::LimitInfeasible { .. } => KronStatus::LimitInfeasible,
        KronError::OutOfRegion(_) => KronStatus::OutOfRegion,
        KronError::Parse(_) => KronStatus::Parse,
        KronError::Overflow(_) => KronStatus::Overflow,
    }
}

struct Failure(KronStatus, String);

impl From<KronError> for Failure {
    fn from(e: KronError) -> Self {
        Failure(status_of(&e), e.to_string())
    }
}

fn null() -> Failure {
    Failure(KronStatus::NullPointer, "null pointer argument".into())
}

fn guard(f: impl FnOnce() -> Result<(), Failure>) -> KronStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            LAST_ERROR.with(|e| *e.borrow_mut() = None);
            KronStatus::Ok
        }
        Ok(Err(Failure(status, msg))) => {
            set_error(&msg);
            status
        }
        Err(panic) => {
            let msg = panic
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| panic.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "internal panic".into());
            set_error(&msg);
            KronStatus::Panic
        }
    }
}

unsafe fn partition<'a>(p: *const KronPartition) -> Result<&'a Partition, Failure> {
    p.as_ref().map(|h| &h.0).ok_or_else(null)
}

unsafe fn write<T>(out: *mut T, value: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null());
    }
    out.write(value);
    Ok(())
}

fn to_u64(v: u128) -> Result<u64, Failure> {
    u64::try_from(v).map_err(|_| Failure(KronStatus::Overflow, format!("{v} does not fit in 64 bits")))
}

fn string_out(s: String, out: *mut *mut c_char) -> Result<(), Failure> {
    let c = CString::new(s).map_err(|_| Failure(KronStatus::InvalidArgument, "string holds a nul byte".into()))?;
    unsafe { write(out, c.into_raw()) }
}

/// Message for the last failed call on this thread, or null. Valid until the
/// next call into the library on the same thread.
#[no_mangle]
pub extern "C" fn kronlab_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Releases a string returned by this library.
///
/// # Safety
/// `s` must be null or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn kronlab_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses `"8,3,3,1"`, with `"-"` or `""` for the empty partition.
///
/// # Safety
/// `text` must be a valid nul-terminated string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn kronlab_partition_parse(text: *const c_char, out: *mut *mut KronPartition) -> KronStatus {
    guard(|| {
        if text.is_null() {
            return Err(null());
        }
        let s = CStr::from_ptr(text)
            .to_str()
            .map_err(|_| Failure(KronStatus::Parse, "partition text is not UTF-8".into()))?;
        let p: Partition = s.parse()?;
        write(out, Box::into_raw(Box::new(KronPartition(p))))
    })
}

/// Builds a partition from `len` weakly decreasing positive parts.
///
/// # Safety
/// `parts` must point to `len` readable values (or be null with `len == 0`)
/// and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn kronlab_partition_new(parts: *const usize, len: usize, out: *mut *mut KronPartition) -> KronStatus {
    guard(|| {
        let v = if len == 0 {
            Vec::new()
        } else if parts.is_null() {
            return Err(null());
        } else {
            std::slice::from_raw_parts(parts, len).to_vec()
        };
        let p = Partition::new(v)?;
        write(out, Box::into_raw(Box::new(KronPartition(p))))
    })
}

/// Releases a partition handle.
///
/// # Safety
/// `p` must be null or a handle from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn kronlab_partition_free(p: *mut KronPartition) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// Weight of a partition; 0 for a null handle.
///
/// # Safety
/// `p` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn kronlab_partition_weight(p: *const KronPartition) -> usize {
    p.as_ref().map_or(0, |h| h.0.weight())
}

/// Text form of a partition, released with [`kronlab_string_free`].
///
/// # Safety
/// `p` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn kronlab_partition_to_string(p: *const KronPartition, out: *mut *mut c_char) -> KronStatus {
    guard(|| string_out(partition(p)?.to_string(), out))
}

/// `g(λ, μ, ν)`; zero for unequal weights.
///
/// # Safety
/// Handles must be live and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn kronlab_kronecker(
    lambda: *const KronPartition,
    mu: *const KronPartition,
    nu: *const KronPartition,
    out: *mut u64,
) -> KronStatus {
    guard(|| {
        let v = kronecker(partition(lambda)?, partition(mu)?, partition(nu)?);
        write(out, to_u64(v)?)
    })
}

/// `ḡ(α, β, γ)`.
///
/// # Safety
/// Handles must be live and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn kronlab_reduced_kronecker(
    alpha: *const KronPartition,
    beta: *const KronPartition,
    gamma: *const KronPartition,
    method: KronReducedMethod,
    out: *mut u64,
) -> KronStatus {
    guard(|| {
        let m = match method {
            KronReducedMethod::Stabilize => ReducedMethod::Stabilize,
            KronReducedMethod::Brion => ReducedMethod::Brion,
            KronReducedMethod::ClosedForm => ReducedMethod::ClosedForm,
        };
        let v = reduced_kronecker(partition(alpha)?, partition(beta)?, partition(gamma)?, m)?;
        write(out, to_u64(v)?)
    })
}

/// The hook-stable limit `ḡ̄(α, β, γ)`.
///
/// # Safety
/// Handles must be live and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn kronlab_hook_stable(
    alpha: *const KronPartition,
    beta: *const KronPartition,
    gamma: *const KronPartition,
    method: KronHookMethod,
    out: *mut u64,
) -> KronStatus {
    guard(|| {
        let m = match method {
            KronHookMethod::Series => HookMethod::Series,
            KronHookMethod::Polynomial => HookMethod::Polynomial,
            KronHookMethod::Limit => HookMethod::Limit,
        };
        let v = hook_stable_value(partition(alpha)?, partition(beta)?, partition(gamma)?, m)?;
        write(out, to_u64(v)?)
    })
}

/// `A`, the three `B` orderings and `C`.
///
/// # Safety
/// Handles must be live and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn kronlab_abc(
    alpha: *const KronPartition,
    beta: *const KronPartition,
    gamma: *const KronPartition,
    method: KronAbcMethod,
    out: *mut KronAbc,
) -> KronStatus {
    guard(|| {
        let m = match method {
            KronAbcMethod::FromPolynomial => AbcMethod::FromPolynomial,
            KronAbcMethod::FromSeries => AbcMethod::FromSeries,
        };
        let r = abc_record(partition(alpha)?, partition(beta)?, partition(gamma)?, m)?;
        write(out, KronAbc { a: r.a, b: r.b, c: r.c })
    })
}

/// `P̄row` or `P̄col` as a polynomial handle.
///
/// # Safety
/// Handles must be live and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn kronlab_q_polynomial(
    alpha: *const KronPartition,
    beta: *const KronPartition,
    gamma: *const KronPartition,
    variant: KronVariant,
    out: *mut *mut KronPoly,
) -> KronStatus {
    guard(|| {
        let v = match variant {
            KronVariant::Row => QVariant::Row,
            KronVariant::Col => QVariant::Col,
        };
        let q = q_polynomial(partition(alpha)?, partition(beta)?, partition(gamma)?, v)?;
        write(out, Box::into_raw(Box::new(KronPoly(q.poly))))
    })
}

/// Text form such as `x + y + x*y - z^-1`, released with
/// [`kronlab_string_free`].
///
/// # Safety
/// `poly` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn kronlab_poly_to_string(poly: *const KronPoly, out: *mut *mut c_char) -> KronStatus {
    guard(|| {
        let p = poly.as_ref().ok_or_else(null)?;
        string_out(p.0.to_string(), out)
    })
}

/// Exact value at integer `x, y, z`, as a reduced fraction.
///
/// # Safety
/// `poly` must be a live handle; `num` and `den` writable.
#[no_mangle]
pub unsafe extern "C" fn kronlab_poly_eval(
    poly: *const KronPoly,
    x: i64,
    y: i64,
    z: i64,
    num: *mut i64,
    den: *mut i64,
) -> KronStatus {
    guard(|| {
        let p = poly.as_ref().ok_or_else(null)?;
        let at = [x, y, z];
        if p.0.terms().any(|(e, _)| (0..3).any(|i| e[i] < 0 && at[i] == 0)) {
            return Err(Failure(KronStatus::InvalidArgument, "negative power evaluated at zero".into()));
        }
        let r = |v: i64| BigRational::from_integer(BigInt::from(v));
        let (rx, ry, rz, one) = (r(x), r(y), r(z), r(1));
        let v = p.0.eval([&rx, &ry, &rz, &one]);
        let overflow = || Failure(KronStatus::Overflow, format!("{v} does not fit in 64 bits"));
        let n = v.numer().to_i64().ok_or_else(overflow)?;
        let d = v.denom().to_i64().ok_or_else(overflow)?;
        write(num, n)?;
        write(den, d)
    })
}

/// Releases a polynomial handle.
///
/// # Safety
/// `poly` must be null or a handle from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn kronlab_poly_free(poly: *mut KronPoly) {
    if !poly.is_null() {
        drop(Box::from_raw(poly));
    }
}
