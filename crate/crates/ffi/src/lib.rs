//! C ABI over `artin_core`.
//!
//! Every fallible function returns an [`ArtinStatus`] and writes its result
//! through an out pointer. On failure, [`artin_last_error`] describes what
//! went wrong on the calling thread. Strings handed out by this library are
//! released with [`artin_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use artin_core::braid::{garside_nf, BraidWord};
use artin_core::dihedral::DihedralOracle;
use artin_core::harness::{run_report, ReportConfig};
use artin_core::morphisms::{GroupRef, OracleConfig, WordOracle};
use artin_core::presentations::parse_word;
use artin_core::{ArtinError, ArtinType};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArtinStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    InvalidType = 3,
    Parse = 4,
    RankMismatch = 5,
    BudgetExceeded = 6,
    Unsupported = 7,
    TrivialCenter = 8,
    NotLiftable = 9,
    UndefinedComposition = 10,
    Mismatch = 11,
    OutOfRange = 12,
    Panic = 13,
}

impl From<&ArtinError> for ArtinStatus {
    fn from(e: &ArtinError) -> Self {
        match e {
            ArtinError::InvalidType(_) => ArtinStatus::InvalidType,
            ArtinError::Parse { .. } => ArtinStatus::Parse,
            ArtinError::RankMismatch { .. } => ArtinStatus::RankMismatch,
            ArtinError::BudgetExceeded { .. } => ArtinStatus::BudgetExceeded,
            ArtinError::Unsupported(_) => ArtinStatus::Unsupported,
            ArtinError::TrivialCenter(_) => ArtinStatus::TrivialCenter,
            ArtinError::NotLiftable { .. } => ArtinStatus::NotLiftable,
            ArtinError::UndefinedComposition(_) => ArtinStatus::UndefinedComposition,
            ArtinError::Mismatch(_) => ArtinStatus::Mismatch,
            ArtinError::OutOfRange(_) => ArtinStatus::OutOfRange,
        }
    }
}

/// Equality oracle for one group, created from a type tag such as `B:4`.
pub struct ArtinOracle {
    group: GroupRef,
    inner: Box<dyn WordOracle>,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).expect("interior nuls removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

struct Failure(ArtinStatus, String);

impl From<ArtinError> for Failure {
    fn from(e: ArtinError) -> Self {
        Failure(ArtinStatus::from(&e), e.to_string())
    }
}

/// Runs `body`, mapping errors and panics to a status and the last error.
fn guard(body: impl FnOnce() -> Result<(), Failure>) -> ArtinStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => ArtinStatus::Ok,
        Ok(Err(Failure(status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic".into());
            ArtinStatus::Panic
        }
    }
}

unsafe fn str_arg<'a>(p: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(Failure(ArtinStatus::NullPointer, format!("{what} is null")));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Failure(ArtinStatus::InvalidUtf8, format!("{what} is not UTF-8")))
}

fn check_out<T>(out: *mut T) -> Result<(), Failure> {
    if out.is_null() {
        Err(Failure(ArtinStatus::NullPointer, "output pointer is null".into()))
    } else {
        Ok(())
    }
}

fn owned(s: String) -> *mut c_char {
    CString::new(s).expect("library strings have no nul bytes").into_raw()
}

/// Creates an oracle for `tag` (`A:n`, `B:n`, `AffA:n`, `AffC:n`, `I2:m`,
/// optionally suffixed `/Z`, or `Z`). Free it with [`artin_oracle_free`].
///
/// # Safety
/// `tag` must be a nul-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn artin_oracle_new(tag: *const c_char, out: *mut *mut ArtinOracle) -> ArtinStatus {
    guard(|| {
        check_out(out)?;
        let group: GroupRef = str_arg(tag, "tag")?.parse()?;
        let inner = group.oracle(&OracleConfig::default())?;
        *out = Box::into_raw(Box::new(ArtinOracle { group, inner }));
        Ok(())
    })
}

/// # Safety
/// `oracle` must come from [`artin_oracle_new`] and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn artin_oracle_free(oracle: *mut ArtinOracle) {
    if !oracle.is_null() {
        drop(Box::from_raw(oracle));
    }
}

/// Number of generators, or 0 for a null handle.
///
/// # Safety
/// `oracle` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn artin_oracle_rank(oracle: *const ArtinOracle) -> usize {
    oracle.as_ref().map_or(0, |o| o.group.rank())
}

/// Writes whether the two words (space-separated signed indices) are equal.
///
/// # Safety
/// `oracle` must be a live handle, the words nul-terminated strings and
/// `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn artin_oracle_equal(
    oracle: *const ArtinOracle,
    word1: *const c_char,
    word2: *const c_char,
    out: *mut bool,
) -> ArtinStatus {
    guard(|| {
        check_out(out)?;
        let o = oracle
            .as_ref()
            .ok_or_else(|| Failure(ArtinStatus::NullPointer, "oracle is null".into()))?;
        let rank = o.group.rank();
        let u = parse_word(str_arg(word1, "word1")?, rank)?;
        let v = parse_word(str_arg(word2, "word2")?, rank)?;
        *out = o.inner.equal(&u, &v)?;
        Ok(())
    })
}

/// Left normal form of a word in `A:n` or `I2:m`, as `Δ^k [..] [..]`.
///
/// # Safety
/// `tag` and `word` must be nul-terminated strings and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn artin_normal_form(
    tag: *const c_char,
    word: *const c_char,
    out: *mut *mut c_char,
) -> ArtinStatus {
    guard(|| {
        check_out(out)?;
        let t: ArtinType = str_arg(tag, "tag")?.parse()?;
        let w = parse_word(str_arg(word, "word")?, t.rank())?;
        let nf = match t {
            ArtinType::A(n) => garside_nf(&BraidWord::new(n, w)?).to_string(),
            ArtinType::I2(m) => DihedralOracle::new(m)?.normal_form(&w)?.to_string(),
            other => return Err(ArtinError::OutOfRange(format!("no normal form for {other}")).into()),
        };
        *out = owned(nf);
        Ok(())
    })
}

/// Runs the verification report at the given ranks and writes it as JSON.
///
/// # Safety
/// `ranks` must point to `len` values and `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn artin_report_json(
    ranks: *const usize,
    len: usize,
    seed: u64,
    out: *mut *mut c_char,
) -> ArtinStatus {
    guard(|| {
        check_out(out)?;
        if ranks.is_null() && len > 0 {
            return Err(Failure(ArtinStatus::NullPointer, "ranks is null".into()));
        }
        let ranks = if len == 0 { Vec::new() } else { std::slice::from_raw_parts(ranks, len).to_vec() };
        let config = ReportConfig {
            ranks,
            seed,
            ..ReportConfig::default()
        };
        *out = owned(run_report(&config)?.to_json());
        Ok(())
    })
}

/// # Safety
/// `s` must be null or a string returned by this library, freed once.
#[no_mangle]
pub unsafe extern "C" fn artin_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Message for the last failure on this thread, or null. The pointer stays
/// valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn artin_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Static version string.
#[no_mangle]
pub extern "C" fn artin_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}
