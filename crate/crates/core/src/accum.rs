//! Compensated (Neumaier) summation. Norms and Monte Carlo reductions go
//! through this accumulator so that 1e-12 tolerances stay meaningful at mode
//! counts up to 2^14 and reductions are independent of chunking.

#[derive(Debug, Default, Clone, Copy)]
pub(crate) struct NeumaierSum {
    sum: f64,
    comp: f64,
}

impl NeumaierSum {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.comp += (self.sum - t) + x;
        } else {
            self.comp += (x - t) + self.sum;
        }
        self.sum = t;
    }

    pub fn value(&self) -> f64 {
        self.sum + self.comp
    }
}

pub(crate) fn sum_compensated<I: IntoIterator<Item = f64>>(values: I) -> f64 {
    let mut acc = NeumaierSum::new();
    for x in values {
        acc.add(x);
    }
    acc.value()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn recovers_cancelling_sum() {
        // 1 + 1e-16 repeated: naive summation loses the tail entirely.
        let n = 100_000;
        let mut acc = NeumaierSum::new();
        acc.add(1.0);
        for _ in 0..n {
            acc.add(1e-16);
        }
        acc.add(-1.0);
        let exact = n as f64 * 1e-16;
        assert!((acc.value() - exact).abs() < 1e-18);
    }

    #[test]
    fn matches_naive_on_benign_input() {
        let xs: Vec<f64> = (1..=100).map(|i| i as f64).collect();
        assert_eq!(sum_compensated(xs.iter().copied()), 5050.0);
    }
}
