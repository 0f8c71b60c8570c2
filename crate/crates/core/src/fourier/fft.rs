//! Radix-2 interval FFT with cached interval twiddle factors.

use crate::interval::{ComplexInterval, Interval};
use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

fn twiddle_cache() -> &'static Mutex<HashMap<(usize, i32), Arc<Vec<ComplexInterval>>>> {
    static CACHE: OnceLock<Mutex<HashMap<(usize, i32), Arc<Vec<ComplexInterval>>>>> =
        OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Twiddles e^{sign * 2 pi i m / n} for m = 0..n/2.
fn twiddles(n: usize, sign: i32) -> Arc<Vec<ComplexInterval>> {
    let mut cache = twiddle_cache().lock().unwrap();
    cache
        .entry((n, sign))
        .or_insert_with(|| {
            let tw: Vec<ComplexInterval> = (0..n / 2)
                .map(|m| {
                    // m/n is exact for power-of-two n
                    let angle =
                        Interval::two_pi() * Interval::point(sign as f64 * m as f64 / n as f64);
                    ComplexInterval::exp_i(angle)
                })
                .collect();
            Arc::new(tw)
        })
        .clone()
}

/// In-place radix-2 decimation-in-time FFT; `sign = -1` is the forward
/// transform (no normalization). Deterministic butterfly order.
pub fn fft_interval(buf: &mut [ComplexInterval], sign: i32) {
    let n = buf.len();
    assert!(n.is_power_of_two() && n >= 2);
    let mut j = 0usize;
    for i in 1..n {
        let mut bit = n >> 1;
        while j & bit != 0 {
            j ^= bit;
            bit >>= 1;
        }
        j |= bit;
        if i < j {
            buf.swap(i, j);
        }
    }
    let tw = twiddles(n, sign);
    let mut len = 2;
    while len <= n {
        let half = len / 2;
        let stride = n / len;
        let mut base = 0;
        while base < n {
            for m in 0..half {
                let w = tw[m * stride];
                let u = buf[base + m];
                let v = buf[base + m + half] * w;
                buf[base + m] = u + v;
                buf[base + m + half] = u - v;
            }
            base += len;
        }
        len <<= 1;
    }
}
