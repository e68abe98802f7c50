//! C ABI over `liegrowth`.
//!
//! Root systems and enumeration results are exposed as opaque handles that the
//! caller releases with the matching `*_free` function. Every fallible call
//! returns an [`LgStatus`]; on failure a message is available from
//! [`lg_last_error_message`] on the same thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;
use std::slice;

use liegrowth::census::PairTable;
use liegrowth::enumerate::{irreps_with, IrrepRecord};
use liegrowth::multiplicity::{self, TorusElement, DEFAULT_WEIGHT_CAP};
use liegrowth::{zetabounds, CVector, Error, RootSystemData, RootSystemId, WeylDimension};

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LgStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidId = 2,
    Domain = 3,
    Divergent = 4,
    ResourceLimit = 5,
    NoRegularElement = 6,
    Precondition = 7,
    BufferTooSmall = 8,
    Overflow = 9,
    InvalidUtf8 = 10,
    Panic = 11,
}

/// Opaque handle to one root system with its dimension evaluator.
pub struct LgRootSystem {
    data: RootSystemData,
    eval: WeylDimension,
}

/// Opaque handle to an enumeration result.
pub struct LgIrrepList {
    rank: usize,
    records: Vec<IrrepRecord>,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = CString::new(msg.into().replace('\0', " ")).expect("nul bytes removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(msg));
}

fn fail(status: LgStatus, msg: impl Into<String>) -> LgStatus {
    set_error(msg);
    status
}

impl From<Error> for LgStatus {
    fn from(e: Error) -> Self {
        let status = match e {
            Error::InvalidId { .. } => LgStatus::InvalidId,
            Error::Domain(_) => LgStatus::Domain,
            Error::Divergent { .. } => LgStatus::Divergent,
            Error::ResourceLimit { .. } => LgStatus::ResourceLimit,
            Error::NoRegularElement { .. } => LgStatus::NoRegularElement,
            Error::Precondition(_) => LgStatus::Precondition,
        };
        fail(status, e.to_string())
    }
}

/// Runs `f`, turning panics into `LgStatus::Panic`.
fn guard<F>(f: F) -> LgStatus
where
    F: FnOnce() -> Result<(), LgStatus>,
{
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => LgStatus::Ok,
        Ok(Err(status)) => status,
        Err(_) => fail(LgStatus::Panic, "internal panic"),
    }
}

fn non_null<T>(p: *const T, name: &str) -> Result<(), LgStatus> {
    if p.is_null() {
        Err(fail(LgStatus::NullPointer, format!("{name} is null")))
    } else {
        Ok(())
    }
}

unsafe fn c_vector<'a>(
    sys: *const LgRootSystem,
    c: *const u64,
    len: usize,
) -> Result<(&'a LgRootSystem, CVector), LgStatus> {
    non_null(sys, "system")?;
    non_null(c, "c")?;
    let sys = &*sys;
    let values = slice::from_raw_parts(c, len).to_vec();
    let c = CVector::new(values)?;
    if c.len() != sys.data.rank() {
        return Err(fail(
            LgStatus::Domain,
            format!("c has {} entries, rank is {}", c.len(), sys.data.rank()),
        ));
    }
    Ok((sys, c))
}

/// Message for the last failed call on this thread, or null. The pointer stays
/// valid until the next call into this library on the same thread.
#[no_mangle]
pub extern "C" fn lg_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Builds the root system named by `id` (e.g. `"E8"`).
///
/// # Safety
/// `id` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn lg_root_system_new(
    id: *const c_char,
    out: *mut *mut LgRootSystem,
) -> LgStatus {
    guard(|| {
        non_null(id, "id")?;
        non_null(out, "out")?;
        let id = CStr::from_ptr(id)
            .to_str()
            .map_err(|_| fail(LgStatus::InvalidUtf8, "id is not valid UTF-8"))?;
        let id: RootSystemId = id.parse()?;
        let data = RootSystemData::build(id);
        let eval = WeylDimension::from_data(&data);
        *out = Box::into_raw(Box::new(LgRootSystem { data, eval }));
        Ok(())
    })
}

/// # Safety
/// `sys` must come from [`lg_root_system_new`] and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn lg_root_system_free(sys: *mut LgRootSystem) {
    if !sys.is_null() {
        drop(Box::from_raw(sys));
    }
}

/// # Safety
/// `sys` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn lg_root_system_rank(sys: *const LgRootSystem) -> usize {
    sys.as_ref().map_or(0, |s| s.data.rank())
}

/// # Safety
/// `sys` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn lg_root_system_num_positive(sys: *const LgRootSystem) -> usize {
    sys.as_ref().map_or(0, |s| s.data.num_positive)
}

/// # Safety
/// `sys` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn lg_root_system_coxeter_number(sys: *const LgRootSystem) -> u64 {
    sys.as_ref().map_or(0, |s| s.data.coxeter_number)
}

/// Copies the simple-root coefficients of positive root `index` into `coeffs`,
/// which must hold `len >= rank` entries.
///
/// # Safety
/// `sys` must be a live handle and `coeffs` valid for `len` writes.
#[no_mangle]
pub unsafe extern "C" fn lg_root_system_positive_root(
    sys: *const LgRootSystem,
    index: usize,
    coeffs: *mut i32,
    len: usize,
) -> LgStatus {
    guard(|| {
        non_null(sys, "system")?;
        non_null(coeffs, "coeffs")?;
        let sys = &*sys;
        let root = sys.data.positive_roots.get(index).ok_or_else(|| {
            fail(
                LgStatus::Domain,
                format!(
                    "root index {index} out of range 0..{}",
                    sys.data.num_positive
                ),
            )
        })?;
        if len < root.coeffs.len() {
            return Err(fail(
                LgStatus::BufferTooSmall,
                "coefficient buffer shorter than rank",
            ));
        }
        slice::from_raw_parts_mut(coeffs, len)[..root.coeffs.len()].copy_from_slice(&root.coeffs);
        Ok(())
    })
}

/// Degree of the character with shifted coordinates `c`, when it fits in 64 bits.
///
/// # Safety
/// `sys` must be a live handle, `c` valid for `len` reads, `out` valid.
#[no_mangle]
pub unsafe extern "C" fn lg_dimension_u64(
    sys: *const LgRootSystem,
    c: *const u64,
    len: usize,
    out: *mut u64,
) -> LgStatus {
    guard(|| {
        non_null(out, "out")?;
        let (sys, c) = c_vector(sys, c, len)?;
        let dim = sys.eval.dimension(&c)?;
        *out = u64::try_from(&dim).map_err(|_| {
            fail(
                LgStatus::Overflow,
                format!("dimension {dim} exceeds 64 bits"),
            )
        })?;
        Ok(())
    })
}

/// Degree as a NUL-terminated decimal string. `written` receives the string
/// length excluding the terminator; on `BufferTooSmall` it receives the
/// required buffer size including the terminator.
///
/// # Safety
/// `sys` must be a live handle, `c` valid for `len` reads, `buf` valid for
/// `buf_len` writes, `written` valid.
#[no_mangle]
pub unsafe extern "C" fn lg_dimension_decimal(
    sys: *const LgRootSystem,
    c: *const u64,
    len: usize,
    buf: *mut c_char,
    buf_len: usize,
    written: *mut usize,
) -> LgStatus {
    guard(|| {
        non_null(buf, "buf")?;
        non_null(written, "written")?;
        let (sys, c) = c_vector(sys, c, len)?;
        let text = sys.eval.dimension(&c)?.to_string();
        if text.len() + 1 > buf_len {
            *written = text.len() + 1;
            return Err(fail(LgStatus::BufferTooSmall, "decimal buffer too small"));
        }
        let dst = slice::from_raw_parts_mut(buf as *mut u8, buf_len);
        dst[..text.len()].copy_from_slice(text.as_bytes());
        dst[text.len()] = 0;
        *written = text.len();
        Ok(())
    })
}

/// Riemann zeta at real `s > 1` within `abs_tol`.
///
/// # Safety
/// `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn lg_riemann_zeta(s: f64, abs_tol: f64, out: *mut f64) -> LgStatus {
    guard(|| {
        non_null(out, "out")?;
        *out = zetabounds::riemann_zeta(s, abs_tol)?;
        Ok(())
    })
}

/// `prod_j zeta(v_j s)` over the exponent profile of this system.
///
/// # Safety
/// `sys` must be a live handle and `out` valid.
#[no_mangle]
pub unsafe extern "C" fn lg_z_bound(sys: *const LgRootSystem, s: f64, out: *mut f64) -> LgStatus {
    guard(|| {
        non_null(sys, "system")?;
        non_null(out, "out")?;
        let profile = zetabounds::ExponentProfile::from_data(&(*sys).data);
        *out = zetabounds::z_bound_profile(&profile, s)?;
        Ok(())
    })
}

/// Enumerates all characters of degree `<= max_dim`, sorted by degree.
///
/// # Safety
/// `sys` must be a live handle and `out` valid.
#[no_mangle]
pub unsafe extern "C" fn lg_irreps_new(
    sys: *const LgRootSystem,
    max_dim: u64,
    out: *mut *mut LgIrrepList,
) -> LgStatus {
    guard(|| {
        non_null(sys, "system")?;
        non_null(out, "out")?;
        if max_dim == 0 {
            return Err(fail(LgStatus::Domain, "max_dim must be at least 1"));
        }
        let sys = &*sys;
        let records = irreps_with(&sys.eval, max_dim);
        *out = Box::into_raw(Box::new(LgIrrepList {
            rank: sys.data.rank(),
            records,
        }));
        Ok(())
    })
}

/// # Safety
/// `list` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn lg_irreps_len(list: *const LgIrrepList) -> usize {
    list.as_ref().map_or(0, |l| l.records.len())
}

/// Copies record `index`: its c-vector into `c` (at least rank entries) and
/// its degree into `dim`.
///
/// # Safety
/// `list` must be a live handle, `c` valid for `len` writes, `dim` valid.
#[no_mangle]
pub unsafe extern "C" fn lg_irreps_get(
    list: *const LgIrrepList,
    index: usize,
    c: *mut u64,
    len: usize,
    dim: *mut u64,
) -> LgStatus {
    guard(|| {
        non_null(list, "list")?;
        non_null(c, "c")?;
        non_null(dim, "dim")?;
        let list = &*list;
        let rec = list.records.get(index).ok_or_else(|| {
            fail(
                LgStatus::Domain,
                format!(
                    "record index {index} out of range 0..{}",
                    list.records.len()
                ),
            )
        })?;
        if len < list.rank {
            return Err(fail(LgStatus::BufferTooSmall, "c buffer shorter than rank"));
        }
        slice::from_raw_parts_mut(c, len)[..list.rank].copy_from_slice(rec.c.as_slice());
        *dim = u64::try_from(&rec.dim).expect("bounded by max_dim");
        Ok(())
    })
}

/// # Safety
/// `list` must come from [`lg_irreps_new`] and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn lg_irreps_free(list: *mut LgIrrepList) {
    if !list.is_null() {
        drop(Box::from_raw(list));
    }
}

/// Number of faithful irreducible pairs `(G, V)` with `dim V = n`.
///
/// # Safety
/// `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn lg_census_count(n: u64, out: *mut u64) -> LgStatus {
    guard(|| {
        non_null(out, "out")?;
        *out = PairTable::build(n).census_count(n);
        Ok(())
    })
}

/// Eigenspace bound for a regular element of prime order `p`, found by
/// lexicographic search: writes the largest eigenspace dimension and the
/// lower and upper bounds, and whether they hold.
///
/// # Safety
/// `sys` must be a live handle, `c` valid for `len` reads, outputs valid.
#[no_mangle]
pub unsafe extern "C" fn lg_eigen_bounds(
    sys: *const LgRootSystem,
    c: *const u64,
    len: usize,
    p: u64,
    w_max: *mut u64,
    lower: *mut f64,
    upper: *mut f64,
    pass: *mut bool,
) -> LgStatus {
    guard(|| {
        non_null(w_max, "w_max")?;
        non_null(lower, "lower")?;
        non_null(upper, "upper")?;
        non_null(pass, "pass")?;
        let (sys, c) = c_vector(sys, c, len)?;
        let g: TorusElement = multiplicity::find_regular_in(&sys.data, p)?;
        let diagram =
            multiplicity::weight_diagram_with(&sys.data, &sys.eval, &c, DEFAULT_WEIGHT_CAP)?;
        let profile = multiplicity::eigen_profile_of(&sys.data, &diagram, &g)?;
        let report = multiplicity::eigen_bounds(&sys.data, &profile, p)?;
        *w_max = report.w_max;
        *lower = report.lower;
        *upper = report.upper;
        *pass = report.pass;
        Ok(())
    })
}
