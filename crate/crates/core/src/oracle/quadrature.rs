//! Globally adaptive Gauss–Kronrod (7/15) quadrature.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use crate::{Error, Result};

// 15-point Kronrod nodes and weights, 7-point Gauss weights, as tabulated.
#[allow(clippy::excessive_precision)]
const XGK: [f64; 8] = [
    0.991_455_371_120_812_639_206_854_697_526_329,
    0.949_107_912_342_758_524_526_189_684_047_851,
    0.864_864_423_359_769_072_789_712_788_640_926,
    0.741_531_185_599_394_439_863_864_773_280_788,
    0.586_087_235_467_691_130_294_144_845_693_013,
    0.405_845_151_377_397_166_906_606_412_076_961,
    0.207_784_955_007_898_467_600_689_403_773_245,
    0.0,
];

#[allow(clippy::excessive_precision)]
const WGK: [f64; 8] = [
    0.022_935_322_010_529_224_963_732_008_058_970,
    0.063_092_092_629_978_553_290_700_663_189_204,
    0.104_790_010_322_250_183_839_876_322_541_518,
    0.140_653_259_715_525_918_745_189_590_510_238,
    0.169_004_726_639_267_902_826_583_426_598_550,
    0.190_350_578_064_785_409_913_256_402_421_014,
    0.204_432_940_075_298_892_414_161_999_234_649,
    0.209_482_141_084_727_828_012_999_174_891_714,
];

// Gauss weights for the nodes XGK[1], XGK[3], XGK[5], XGK[7].
#[allow(clippy::excessive_precision)]
const WG: [f64; 4] = [
    0.129_484_966_168_869_693_270_611_432_679_082,
    0.279_705_391_489_276_667_901_467_771_423_780,
    0.381_830_050_505_118_944_950_369_775_488_975,
    0.417_959_183_673_469_387_755_102_040_816_327,
];

#[derive(Debug, Clone, Copy)]
struct Segment {
    a: f64,
    b: f64,
    value: f64,
    error: f64,
    mass: f64,
    floor: f64,
}

impl PartialEq for Segment {
    fn eq(&self, other: &Self) -> bool {
        self.error == other.error
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

fn kronrod<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> Segment {
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let fc = f(center);
    let mut kron = fc * WGK[7];
    let mut gauss = fc * WG[3];
    let mut abs = fc.abs() * WGK[7];
    let mut values = [0.0; 15];
    values[7] = fc;
    for j in 0..7 {
        let dx = half * XGK[j];
        let f1 = f(center - dx);
        let f2 = f(center + dx);
        values[j] = f1;
        values[14 - j] = f2;
        kron += WGK[j] * (f1 + f2);
        abs += WGK[j] * (f1.abs() + f2.abs());
        if j % 2 == 1 {
            gauss += WG[j / 2] * (f1 + f2);
        }
    }
    let mean = 0.5 * kron;
    let mut asc = WGK[7] * (fc - mean).abs();
    for j in 0..7 {
        asc += WGK[j] * ((values[j] - mean).abs() + (values[14 - j] - mean).abs());
    }
    let value = kron * half;
    let resabs = abs * half.abs();
    let resasc = asc * half.abs();
    let mut error = ((kron - gauss) * half).abs();
    if resasc != 0.0 && error != 0.0 {
        error = resasc * (200.0 * error / resasc).powf(1.5).min(1.0);
    }
    let floor = 50.0 * f64::EPSILON * resabs;
    Segment {
        a,
        b,
        value,
        error: error.max(floor),
        mass: resabs,
        floor,
    }
}

/// Result of one adaptive integration.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Integral {
    pub value: f64,
    pub error: f64,
    /// ∫|f|, the scale against which roundoff is judged.
    pub mass: f64,
    pub subdivisions: usize,
}

/// Integrates `f` over consecutive panels `breaks[0]..breaks[1]..`, refining
/// the worst segment until the summed error is below
/// `max(abs_tol, rel_tol · mass)`.
pub fn integrate<F: Fn(f64) -> f64>(
    f: F,
    breaks: &[f64],
    abs_tol: f64,
    rel_tol: f64,
    max_segments: usize,
) -> Result<Integral> {
    assert!(breaks.len() >= 2, "need at least one panel");
    let mut heap: BinaryHeap<Segment> = breaks
        .windows(2)
        .filter(|w| w[1] > w[0])
        .map(|w| kronrod(&f, w[0], w[1]))
        .collect();
    let mut total_error: f64 = heap.iter().map(|s| s.error).sum();
    let mut mass: f64 = heap.iter().map(|s| s.mass).sum();
    loop {
        let tol = abs_tol.max(rel_tol * mass);
        if total_error <= tol {
            break;
        }
        if heap.len() >= max_segments {
            let value: f64 = heap.iter().map(|s| s.value).sum();
            return Err(Error::Convergence {
                what: "adaptive quadrature",
                steps: heap.len(),
                estimate: total_error / value.abs().max(f64::MIN_POSITIVE),
            });
        }
        let worst = heap.pop().expect("heap is never empty here");
        if worst.error <= worst.floor {
            // Every segment is down to roundoff; refining cannot help.
            heap.push(worst);
            break;
        }
        let mid = 0.5 * (worst.a + worst.b);
        if mid <= worst.a || mid >= worst.b {
            // Interval exhausted at double precision; keep its estimate.
            heap.push(Segment {
                error: 0.0,
                ..worst
            });
            total_error -= worst.error;
            continue;
        }
        let left = kronrod(&f, worst.a, mid);
        let right = kronrod(&f, mid, worst.b);
        total_error += left.error + right.error - worst.error;
        mass += left.mass + right.mass - worst.mass;
        heap.push(left);
        heap.push(right);
    }
    // Re-sum so the running totals' drift does not leak into the result.
    let mut segments = heap.into_vec();
    segments.sort_by(|x, y| x.a.total_cmp(&y.a));
    Ok(Integral {
        value: segments.iter().map(|s| s.value).sum(),
        error: segments.iter().map(|s| s.error).sum(),
        mass: segments.iter().map(|s| s.mass).sum(),
        subdivisions: segments.len(),
    })
}

/// Breakpoints from `a` to `b` with spacing at most `step`.
pub fn panels(a: f64, b: f64, step: f64) -> Vec<f64> {
    let n = ((b - a) / step).ceil().max(1.0) as usize;
    (0..=n).map(|i| a + (b - a) * i as f64 / n as f64).collect()
}

/// Neville extrapolation of samples `(h_i, v_i)` to h = 0.
///
/// Returns the estimate and the difference to the previous diagonal entry.
pub fn extrapolate_to_zero(samples: &[(f64, f64)]) -> (f64, f64) {
    let n = samples.len();
    let mut p: Vec<f64> = samples.iter().map(|s| s.1).collect();
    let mut prev_diag = p[0];
    let mut diag = p[0];
    for level in 1..n {
        for i in (level..n).rev() {
            let hi = samples[i].0;
            let hj = samples[i - level].0;
            p[i] = (hi * p[i - 1] - hj * p[i]) / (hi - hj);
        }
        prev_diag = diag;
        diag = p[n - 1];
    }
    // p[n-1] now holds the full-table estimate; its neighbour at the previous
    // level is the estimate without the oldest sample.
    (diag, (diag - prev_diag).abs())
}
