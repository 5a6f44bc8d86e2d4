use super::csv::fmt_num;

/// Summary of absolute approximation errors.
#[derive(Debug, Clone, PartialEq)]
pub struct ErrorStats {
    pub count: usize,
    pub max_abs: f64,
    pub mean_abs: f64,
    pub rmse: f64,
    pub p50: f64,
    pub p90: f64,
    pub p99: f64,
    /// Cases where the estimator produced no value; not part of `count`.
    pub count_unavailable: usize,
}

/// Nearest-rank quantile of sorted data.
fn quantile(sorted: &[f64], p: f64) -> f64 {
    let rank = (p * sorted.len() as f64).ceil() as usize;
    sorted[rank.clamp(1, sorted.len()) - 1]
}

impl ErrorStats {
    /// Statistics of `errors` (absolute values, in sample order).
    ///
    /// Sums run sequentially in the given order, so the result depends only on
    /// the data and not on how it was produced.
    pub fn from_abs_errors(errors: &[f64], count_unavailable: usize) -> Self {
        if errors.is_empty() {
            return Self {
                count: 0,
                max_abs: 0.0,
                mean_abs: 0.0,
                rmse: 0.0,
                p50: 0.0,
                p90: 0.0,
                p99: 0.0,
                count_unavailable,
            };
        }
        let n = errors.len() as f64;
        let (sum, sum_sq) = errors.iter().fold((0.0, 0.0), |(s, q), &e| (s + e, q + e * e));
        let mut sorted = errors.to_vec();
        sorted.sort_by(f64::total_cmp);
        Self {
            count: errors.len(),
            max_abs: sorted[sorted.len() - 1],
            mean_abs: sum / n,
            rmse: (sum_sq / n).sqrt(),
            p50: quantile(&sorted, 0.50),
            p90: quantile(&sorted, 0.90),
            p99: quantile(&sorted, 0.99),
            count_unavailable,
        }
    }

    /// One `# stats ...` comment line for CSV trailers.
    pub fn to_comment(&self, scope: &str) -> String {
        format!(
            "# stats scope={scope} count={} max_abs={} mean_abs={} rmse={} p50={} p90={} p99={} unavailable={}",
            self.count,
            fmt_num(self.max_abs),
            fmt_num(self.mean_abs),
            fmt_num(self.rmse),
            fmt_num(self.p50),
            fmt_num(self.p90),
            fmt_num(self.p99),
            self.count_unavailable
        )
    }

    /// Named values for the baseline document.
    pub fn metrics(&self, prefix: &str) -> Vec<(String, f64)> {
        [
            ("max_abs", self.max_abs),
            ("mean_abs", self.mean_abs),
            ("rmse", self.rmse),
            ("p50", self.p50),
            ("p90", self.p90),
            ("p99", self.p99),
            ("unavailable", self.count_unavailable as f64),
        ]
        .into_iter()
        .map(|(k, v)| (format!("{prefix}.{k}"), v))
        .collect()
    }
}
