//! C ABI over `su11_coherent`.
//!
//! States live behind the opaque [`Su11State`] handle. Every function returns
//! an [`Su11Status`]; on failure the message is kept per thread and can be
//! read with [`su11_last_error_message`]. Panics never cross the boundary.
//!
//! Undefined statistics (`g2`, `s1`, `s2` at vanishing denominators) are
//! reported as NaN.

use std::cell::RefCell;
use std::ffi::{c_char, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use su11_coherent::measures::{measure_pointwise_m0, nbgcs_moment_check, pabgcs_moment_check};
use su11_coherent::observables::{closed_suite, expectation_suite};
use su11_coherent::states::{build, overlap};
use su11_coherent::{Complex64, Error, Family, FockVector, IrrepParams, ObservableReport, StateSpec, TruncationPolicy};

pub const SU11_FAMILY_BGCS: u32 = 0;
pub const SU11_FAMILY_NBGCS: u32 = 1;
pub const SU11_FAMILY_PABGCS: u32 = 2;

/// Passing this as `tail_tol` selects the library default.
pub const SU11_DEFAULT_TAIL_TOL: f64 = 0.0;

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Su11Status {
    Ok = 0,
    InvalidParameter = 1,
    LambdaMismatch = 2,
    CutoffCeiling = 3,
    NonConvergence = 4,
    PowerTooLarge = 5,
    OutOfScope = 6,
    Io = 7,
    NullPointer = 8,
    BufferTooSmall = 9,
    Panic = 10,
}

/// Opaque handle to a constructed state.
pub struct Su11State {
    vector: FockVector,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct Su11Observables {
    pub exp_n: f64,
    pub exp_n2: f64,
    pub exp_jp_re: f64,
    pub exp_jp_im: f64,
    pub exp_jp2_re: f64,
    pub exp_jp2_im: f64,
    pub exp_jp_jm: f64,
    pub exp_j3: f64,
    pub var_x1: f64,
    pub var_x2: f64,
    pub g2: f64,
    pub mandel_q: f64,
    pub s1: f64,
    pub s2: f64,
}

impl From<&ObservableReport> for Su11Observables {
    fn from(r: &ObservableReport) -> Self {
        Self {
            exp_n: r.exp_n,
            exp_n2: r.exp_n2,
            exp_jp_re: r.exp_jp.re,
            exp_jp_im: r.exp_jp.im,
            exp_jp2_re: r.exp_jp2.re,
            exp_jp2_im: r.exp_jp2.im,
            exp_jp_jm: r.exp_jp_jm,
            exp_j3: r.exp_j3,
            var_x1: r.var_x1,
            var_x2: r.var_x2,
            g2: r.g2.unwrap_or(f64::NAN),
            mandel_q: r.mandel_q,
            s1: r.s1.unwrap_or(f64::NAN),
            s2: r.s2.unwrap_or(f64::NAN),
        }
    }
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_last_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

enum Failure {
    Lib(Error),
    Null(&'static str),
    Buffer { need: usize, got: usize },
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

fn status_of(e: &Error) -> Su11Status {
    match e {
        Error::InvalidParameter(_) => Su11Status::InvalidParameter,
        Error::LambdaMismatch { .. } => Su11Status::LambdaMismatch,
        Error::CutoffCeiling { .. } => Su11Status::CutoffCeiling,
        Error::NonConvergence { .. } => Su11Status::NonConvergence,
        Error::PowerTooLarge { .. } => Su11Status::PowerTooLarge,
        Error::OutOfScope(_) => Su11Status::OutOfScope,
        Error::Io(_) => Su11Status::Io,
    }
}

fn guard(f: impl FnOnce() -> Result<(), Failure>) -> Su11Status {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => Su11Status::Ok,
        Ok(Err(Failure::Lib(e))) => {
            set_last_error(e.to_string());
            status_of(&e)
        }
        Ok(Err(Failure::Null(what))) => {
            set_last_error(format!("null pointer: {what}"));
            Su11Status::NullPointer
        }
        Ok(Err(Failure::Buffer { need, got })) => {
            set_last_error(format!("buffer holds {got} entries, {need} needed"));
            Su11Status::BufferTooSmall
        }
        Err(payload) => {
            let msg = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "unknown panic".into());
            set_last_error(format!("panic: {msg}"));
            Su11Status::Panic
        }
    }
}

fn family(code: u32) -> Result<Family, Failure> {
    match code {
        SU11_FAMILY_BGCS => Ok(Family::Bgcs),
        SU11_FAMILY_NBGCS => Ok(Family::Nbgcs),
        SU11_FAMILY_PABGCS => Ok(Family::Pabgcs),
        other => Err(Error::InvalidParameter(format!("unknown family code {other}")).into()),
    }
}

fn spec(family_code: u32, z_re: f64, z_im: f64, m: u32, lambda: f64) -> Result<StateSpec, Failure> {
    Ok(StateSpec::new(family(family_code)?, Complex64::new(z_re, z_im), m as usize, IrrepParams::new(lambda)?)?)
}

unsafe fn state_ref<'a>(p: *const Su11State) -> Result<&'a Su11State, Failure> {
    p.as_ref().ok_or(Failure::Null("state"))
}

unsafe fn out_mut<'a, T>(p: *mut T, what: &'static str) -> Result<&'a mut T, Failure> {
    p.as_mut().ok_or(Failure::Null(what))
}

/// Builds a state and stores a new handle in `*out`.
///
/// `family` is one of the `SU11_FAMILY_*` codes; `tail_tol` is the truncation
/// tolerance, or `SU11_DEFAULT_TAIL_TOL`.
///
/// # Safety
/// `out` must be valid for writes. The handle must be released with
/// [`su11_state_free`].
#[no_mangle]
pub unsafe extern "C" fn su11_state_new(
    family: u32,
    z_re: f64,
    z_im: f64,
    m: u32,
    lambda: f64,
    tail_tol: f64,
    out: *mut *mut Su11State,
) -> Su11Status {
    guard(|| {
        let out = out_mut(out, "out")?;
        *out = ptr::null_mut();
        let s = spec(family, z_re, z_im, m, lambda)?;
        let tol = if tail_tol == SU11_DEFAULT_TAIL_TOL { TruncationPolicy::DEFAULT_TAIL_TOL } else { tail_tol };
        let trunc = TruncationPolicy::new(TruncationPolicy::DEFAULT_CUTOFF, tol)?;
        let vector = build(&s, &trunc)?;
        *out = Box::into_raw(Box::new(Su11State { vector }));
        Ok(())
    })
}

/// Releases a handle; null is ignored.
///
/// # Safety
/// `state` must be null or a handle from [`su11_state_new`] not yet freed.
#[no_mangle]
pub unsafe extern "C" fn su11_state_free(state: *mut Su11State) {
    if !state.is_null() {
        let _ = catch_unwind(AssertUnwindSafe(|| drop(Box::from_raw(state))));
    }
}

/// Number of stored coefficients (`cutoff + 1`).
///
/// # Safety
/// `state` must be a live handle and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn su11_state_len(state: *const Su11State, out: *mut usize) -> Su11Status {
    guard(|| {
        *out_mut(out, "out")? = state_ref(state)?.vector.coeffs().len();
        Ok(())
    })
}

/// Copies the coefficients into `re[0..len)` and `im[0..len)`.
///
/// # Safety
/// `state` must be a live handle; `re` and `im` must each hold `len` doubles.
#[no_mangle]
pub unsafe extern "C" fn su11_state_coefficients(
    state: *const Su11State,
    re: *mut f64,
    im: *mut f64,
    len: usize,
) -> Su11Status {
    guard(|| {
        let c = state_ref(state)?.vector.coeffs();
        if re.is_null() || im.is_null() {
            return Err(Failure::Null("coefficient buffer"));
        }
        if len < c.len() {
            return Err(Failure::Buffer { need: c.len(), got: len });
        }
        let re = std::slice::from_raw_parts_mut(re, c.len());
        let im = std::slice::from_raw_parts_mut(im, c.len());
        for (k, v) in c.iter().enumerate() {
            re[k] = v.re;
            im[k] = v.im;
        }
        Ok(())
    })
}

/// Bound on the probability mass beyond the stored coefficients.
///
/// # Safety
/// `state` must be a live handle and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn su11_state_tail_bound(state: *const Su11State, out: *mut f64) -> Su11Status {
    guard(|| {
        *out_mut(out, "out")? = state_ref(state)?.vector.tail_bound();
        Ok(())
    })
}

/// Observables from direct sums over the coefficients.
///
/// # Safety
/// `state` must be a live handle and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn su11_state_observables(state: *const Su11State, out: *mut Su11Observables) -> Su11Status {
    guard(|| {
        let r = expectation_suite(&state_ref(state)?.vector)?;
        *out_mut(out, "out")? = Su11Observables::from(&r);
        Ok(())
    })
}

/// Observables from the hypergeometric closed forms.
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn su11_closed_observables(
    family: u32,
    z_re: f64,
    z_im: f64,
    m: u32,
    lambda: f64,
    out: *mut Su11Observables,
) -> Su11Status {
    guard(|| {
        let r = closed_suite(&spec(family, z_re, z_im, m, lambda)?)?;
        *out_mut(out, "out")? = Su11Observables::from(&r.report);
        Ok(())
    })
}

/// `⟨a|b⟩`, antilinear in `a`.
///
/// # Safety
/// `a` and `b` must be live handles; `re` and `im` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn su11_state_overlap(
    a: *const Su11State,
    b: *const Su11State,
    re: *mut f64,
    im: *mut f64,
) -> Su11Status {
    guard(|| {
        let v = overlap(&state_ref(a)?.vector, &state_ref(b)?.vector)?;
        *out_mut(re, "re")? = v.re;
        *out_mut(im, "im")? = v.im;
        Ok(())
    })
}

/// Ratio of the `n`-th moment of the family's measure to the moment the
/// resolution of unity requires: 1 for BGCS and NBGCS, an `n`-independent
/// constant for PABGCS.
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn su11_moment_ratio(family: u32, n: u32, m: u32, lambda: f64, out: *mut f64) -> Su11Status {
    guard(|| {
        let p = IrrepParams::new(lambda)?;
        let r = match self::family(family)? {
            Family::Pabgcs => pabgcs_moment_check(n as usize, m as usize, p)?,
            Family::Bgcs if m != 0 => {
                return Err(Error::InvalidParameter("BGCS has no order m".into()).into());
            }
            _ => nbgcs_moment_check(n as usize, m as usize, p)?,
        };
        *out_mut(out, "out")? = r.ratio;
        Ok(())
    })
}

/// BGCS measure density at `|z| = x`.
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn su11_measure_m0(x: f64, lambda: f64, out: *mut f64) -> Su11Status {
    guard(|| {
        *out_mut(out, "out")? = measure_pointwise_m0(x, IrrepParams::new(lambda)?)?;
        Ok(())
    })
}

/// Copies the calling thread's last error message, NUL-terminated and
/// truncated to `len` bytes, and returns its full length without the
/// terminator (0 when there is none). `buf` may be null to query the length.
///
/// # Safety
/// `buf` must be null or valid for `len` bytes of writes.
#[no_mangle]
pub unsafe extern "C" fn su11_last_error_message(buf: *mut c_char, len: usize) -> usize {
    LAST_ERROR.with(|e| {
        let e = e.borrow();
        let Some(msg) = e.as_ref() else {
            if !buf.is_null() && len > 0 {
                *buf = 0;
            }
            return 0;
        };
        let bytes = msg.as_bytes();
        if !buf.is_null() && len > 0 {
            let n = bytes.len().min(len - 1);
            ptr::copy_nonoverlapping(bytes.as_ptr() as *const c_char, buf, n);
            *buf.add(n) = 0;
        }
        bytes.len()
    })
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn su11_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr() as *const c_char
}
