use std::cmp::Ordering;
use std::collections::BinaryHeap;
use std::f64::consts::FRAC_PI_2;

use crate::error::{Error, Result};

/// Integration domain; either end may be infinite.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Interval {
    pub lo: f64,
    pub hi: f64,
}

impl Interval {
    pub fn new(lo: f64, hi: f64) -> Result<Self> {
        if lo.is_nan() || hi.is_nan() || lo >= hi {
            return Err(Error::InvalidParams(format!(
                "interval requires lo < hi, got [{lo}, {hi}]"
            )));
        }
        Ok(Interval { lo, hi })
    }

    pub fn whole_line() -> Self {
        Interval {
            lo: f64::NEG_INFINITY,
            hi: f64::INFINITY,
        }
    }

    pub fn half_line(lo: f64) -> Self {
        Interval {
            lo,
            hi: f64::INFINITY,
        }
    }

    pub fn is_finite(&self) -> bool {
        self.lo.is_finite() && self.hi.is_finite()
    }

    pub fn contains(&self, x: f64) -> bool {
        x >= self.lo && x <= self.hi
    }
}

/// Quadrature result with its error estimate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Estimate {
    pub value: f64,
    pub error: f64,
    pub subdivisions: usize,
}

/// Adaptive Gauss–Kronrod (10/21 point) integrator.
///
/// Infinite ends are removed with x = lo + s·tan(u) (and its mirror images),
/// where s is `scale`. Subdivision always splits the segment carrying the
/// largest error estimate.
#[derive(Debug, Clone, Copy)]
pub struct Integrator {
    pub tol: f64,
    pub max_subdivisions: usize,
    pub scale: f64,
    pub initial_pieces: usize,
}

impl Default for Integrator {
    fn default() -> Self {
        Integrator {
            tol: 1e-10,
            max_subdivisions: 5000,
            scale: 1.0,
            initial_pieces: 8,
        }
    }
}

/// ∫ f over `domain` with absolute error at most max(tol, tol·|result|).
pub fn integrate<F: Fn(f64) -> f64>(f: F, domain: Interval, tol: f64) -> Result<f64> {
    Integrator {
        tol,
        ..Integrator::default()
    }
    .integrate(f, domain)
    .map(|e| e.value)
}

const XGK: [f64; 11] = [
    0.995_657_163_025_808_080_735_527_280_689_003,
    0.973_906_528_517_171_720_077_964_012_084_452,
    0.930_157_491_355_708_226_001_207_180_059_508,
    0.865_063_366_688_984_510_732_096_688_423_493,
    0.780_817_726_586_416_897_063_717_578_345_042,
    0.679_409_568_299_024_406_234_327_365_114_874,
    0.562_757_134_668_604_683_339_000_099_272_694,
    0.433_395_394_129_247_190_799_265_943_165_784,
    0.294_392_862_701_460_198_131_126_603_103_866,
    0.148_874_338_981_631_210_884_826_001_129_720,
    0.0,
];
const WG: [f64; 5] = [
    0.066_671_344_308_688_137_593_568_809_893_332,
    0.149_451_349_150_580_593_145_776_339_657_697,
    0.219_086_362_515_982_043_995_534_934_228_163,
    0.269_266_719_309_996_355_091_226_921_569_469,
    0.295_524_224_714_752_870_173_892_994_651_338,
];
const WGK: [f64; 11] = [
    0.011_694_638_867_371_874_278_064_396_062_192,
    0.032_558_162_307_964_727_478_818_972_459_390,
    0.054_755_896_574_351_996_031_381_300_244_580,
    0.075_039_674_810_919_952_767_043_140_916_190,
    0.093_125_454_583_697_605_535_065_465_083_366,
    0.109_387_158_802_297_641_899_210_590_325_805,
    0.123_491_976_262_065_851_077_958_109_831_074,
    0.134_709_217_311_473_325_928_054_001_771_707,
    0.142_775_938_577_060_080_797_094_273_138_717,
    0.147_739_104_901_338_491_374_841_515_972_068,
    0.149_445_554_002_916_905_664_936_468_389_821,
];

struct Segment {
    a: f64,
    b: f64,
    value: f64,
    error: f64,
}

impl PartialEq for Segment {
    fn eq(&self, other: &Self) -> bool {
        self.error.total_cmp(&other.error) == Ordering::Equal
    }
}
impl Eq for Segment {}
impl PartialOrd for Segment {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Segment {
    fn cmp(&self, other: &Self) -> Ordering {
        self.error.total_cmp(&other.error)
    }
}

fn gk21<G: Fn(f64) -> f64>(g: &G, a: f64, b: f64) -> Result<Segment> {
    let centre = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let fc = g(centre);
    let mut kronrod = WGK[10] * fc;
    let mut gauss = 0.0;
    let mut abs_sum = WGK[10] * fc.abs();
    let mut f1 = [0.0; 10];
    let mut f2 = [0.0; 10];
    for j in 0..10 {
        let dx = half * XGK[j];
        let (u, v) = (g(centre - dx), g(centre + dx));
        f1[j] = u;
        f2[j] = v;
        kronrod += WGK[j] * (u + v);
        abs_sum += WGK[j] * (u.abs() + v.abs());
        if j % 2 == 1 {
            gauss += WG[j / 2] * (u + v);
        }
    }
    if !kronrod.is_finite() {
        return Err(Error::Domain {
            x: centre,
            what: "integrand is not finite on the quadrature nodes".into(),
        });
    }
    let mean = 0.5 * kronrod;
    let mut asc = WGK[10] * (fc - mean).abs();
    for j in 0..10 {
        asc += WGK[j] * ((f1[j] - mean).abs() + (f2[j] - mean).abs());
    }
    let value = kronrod * half;
    let res_abs = abs_sum * half.abs();
    let res_asc = asc * half.abs();
    let mut error = ((kronrod - gauss) * half).abs();
    if res_asc != 0.0 && error != 0.0 {
        error = res_asc * (200.0 * error / res_asc).powf(1.5).min(1.0);
    }
    if res_abs > f64::MIN_POSITIVE / (50.0 * f64::EPSILON) {
        error = error.max(50.0 * f64::EPSILON * res_abs);
    }
    Ok(Segment { a, b, value, error })
}

impl Integrator {
    pub fn integrate<F: Fn(f64) -> f64>(&self, f: F, domain: Interval) -> Result<Estimate> {
        let (lo, hi) = (domain.lo, domain.hi);
        if lo.is_nan() || hi.is_nan() || lo >= hi {
            return Err(Error::InvalidParams(format!(
                "invalid integration interval [{lo}, {hi}]"
            )));
        }
        let s = self.scale;
        let finite_or_zero = |v: f64| if v == 0.0 { 0.0 } else { v };
        match (lo.is_finite(), hi.is_finite()) {
            (true, true) => self.adapt(&|x| f(x), lo, hi),
            (true, false) => self.adapt(
                &|u: f64| {
                    let t = u.tan();
                    let x = lo + s * t;
                    if !x.is_finite() {
                        return 0.0;
                    }
                    finite_or_zero(f(x)) * s * (1.0 + t * t)
                },
                0.0,
                FRAC_PI_2,
            ),
            (false, true) => self.adapt(
                &|u: f64| {
                    let t = u.tan();
                    let x = hi - s * t;
                    if !x.is_finite() {
                        return 0.0;
                    }
                    finite_or_zero(f(x)) * s * (1.0 + t * t)
                },
                0.0,
                FRAC_PI_2,
            ),
            (false, false) => self.adapt(
                &|u: f64| {
                    let t = u.tan();
                    let x = s * t;
                    if !x.is_finite() {
                        return 0.0;
                    }
                    let v = f(x);
                    if v == 0.0 {
                        0.0
                    } else {
                        v * s * (1.0 + t * t)
                    }
                },
                -FRAC_PI_2,
                FRAC_PI_2,
            ),
        }
    }

    fn adapt<G: Fn(f64) -> f64>(&self, g: &G, a: f64, b: f64) -> Result<Estimate> {
        let pieces = self.initial_pieces.max(1);
        let width = (b - a) / pieces as f64;
        let mut heap = BinaryHeap::with_capacity(pieces + 2 * self.max_subdivisions);
        for i in 0..pieces {
            let lo = a + width * i as f64;
            let hi = if i + 1 == pieces { b } else { lo + width };
            heap.push(gk21(g, lo, hi)?);
        }
        let mut subdivisions = 0;
        loop {
            let value: f64 = heap.iter().map(|s| s.value).sum();
            let error: f64 = heap.iter().map(|s| s.error).sum();
            if error <= self.tol.max(self.tol * value.abs()) {
                return Ok(Estimate {
                    value,
                    error,
                    subdivisions,
                });
            }
            if subdivisions >= self.max_subdivisions {
                return Err(Error::QuadratureNonConvergence {
                    estimate: value,
                    error,
                    subdivisions,
                });
            }
            let worst = heap.pop().expect("heap is never empty");
            let mid = 0.5 * (worst.a + worst.b);
            if mid <= worst.a || mid >= worst.b {
                return Err(Error::QuadratureNonConvergence {
                    estimate: value,
                    error,
                    subdivisions,
                });
            }
            heap.push(gk21(g, worst.a, mid)?);
            heap.push(gk21(g, mid, worst.b)?);
            subdivisions += 1;
        }
    }
}
