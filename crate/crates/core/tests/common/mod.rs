use num_complex::Complex64;

/// All complex roots by Durand-Kerner iteration.
pub fn complex_roots(coeffs: &[f64]) -> Vec<Complex64> {
    let n = coeffs.len() - 1;
    let lead = coeffs[n];
    let eval = |z: Complex64| {
        coeffs
            .iter()
            .rev()
            .fold(Complex64::new(0.0, 0.0), |acc, &c| acc * z + c)
    };
    let mut z: Vec<Complex64> = (0..n)
        .map(|k| Complex64::from_polar(1.0, 0.4 + k as f64) * 1.3)
        .collect();
    for _ in 0..2000 {
        let prev = z.clone();
        for i in 0..n {
            let mut den = Complex64::new(lead, 0.0);
            for j in 0..n {
                if i != j {
                    den *= prev[i] - prev[j];
                }
            }
            z[i] = prev[i] - eval(prev[i]) / den;
        }
    }
    z
}
