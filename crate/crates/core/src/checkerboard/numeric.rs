use std::fmt;

use crate::error::Error;

use super::direction::Dim;
use super::engine::WeightConvention;
use super::poly::AmplitudePoly;

/// A corner polynomial evaluated to floating point.
#[derive(Clone, Copy, PartialEq, Debug, Default)]
pub struct NumericAmplitude {
    pub re: f64,
    pub i: f64,
    pub j: f64,
    pub k: f64,
}

impl NumericAmplitude {
    pub fn norm(&self) -> f64 {
        (self.re * self.re + self.i * self.i + self.j * self.j + self.k * self.k).sqrt()
    }

    pub fn is_zero(&self) -> bool {
        self.re == 0.0 && self.i == 0.0 && self.j == 0.0 && self.k == 0.0
    }
}

impl fmt::Display for NumericAmplitude {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{:+}i{:+}j{:+}k", self.re, self.i, self.j, self.k)
    }
}

/// Physical inputs for evaluating a corner polynomial: the coupling is
/// `μ = m·ε` in 2-D and `μ = m·√3·ε` in 4-D.
#[derive(Clone, Copy, Debug)]
pub struct EvaluationParams {
    mass: f64,
    step: f64,
    dim: Dim,
    convention: WeightConvention,
}

impl EvaluationParams {
    pub fn new(
        mass: f64,
        step: f64,
        dim: Dim,
        convention: WeightConvention,
    ) -> Result<EvaluationParams, Error> {
        if !(mass.is_finite() && mass > 0.0) {
            return Err(Error::NonPositive("mass"));
        }
        if !(step.is_finite() && step > 0.0) {
            return Err(Error::NonPositive("step"));
        }
        Ok(EvaluationParams {
            mass,
            step,
            dim,
            convention,
        })
    }

    pub fn mass(&self) -> f64 {
        self.mass
    }

    pub fn step(&self) -> f64 {
        self.step
    }

    pub fn dim(&self) -> Dim {
        self.dim
    }

    pub fn convention(&self) -> WeightConvention {
        self.convention
    }

    pub fn mu(&self) -> f64 {
        match self.dim {
            Dim::Two => self.mass * self.step,
            Dim::Four => self.mass * 3.0_f64.sqrt() * self.step,
        }
    }
}

/// Substitute `μ^C` for each corner count and sum.
pub fn evaluate(poly: &AmplitudePoly, params: &EvaluationParams) -> NumericAmplitude {
    let mu = params.mu();
    let mut amp = NumericAmplitude::default();
    for (corners, q) in poly.iter() {
        let weight = mu.powi(corners as i32);
        amp.re += weight * q.re.to_f64();
        amp.i += weight * q.i.to_f64();
        amp.j += weight * q.j.to_f64();
        amp.k += weight * q.k.to_f64();
    }
    amp
}

/// Angle between the amplitude and the real axis: `arccos(re / |amp|)`,
/// in [0, π]. Undefined for a zero amplitude.
pub fn phase(amp: &NumericAmplitude) -> Result<f64, Error> {
    if amp.is_zero() {
        return Err(Error::UndefinedPhase);
    }
    Ok((amp.re / amp.norm()).clamp(-1.0, 1.0).acos())
}

/// Step length at which a mass `m` walks its own Compton scale: `h / (m·c)`.
pub fn effective_step_length(mass: f64, planck: f64, light_speed: f64) -> Result<f64, Error> {
    if !(mass.is_finite() && mass > 0.0) {
        return Err(Error::NonPositive("mass"));
    }
    if !(planck.is_finite() && planck > 0.0) {
        return Err(Error::NonPositive("h"));
    }
    if !(light_speed.is_finite() && light_speed > 0.0) {
        return Err(Error::NonPositive("c"));
    }
    Ok(planck / (mass * light_speed))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Quaternion;
    use crate::checkerboard::GroupUnit;

    const TOLERANCE: f64 = 1e-12;

    fn params_2d(mass: f64, step: f64) -> EvaluationParams {
        EvaluationParams::new(mass, step, Dim::Two, WeightConvention::Signed).unwrap()
    }

    #[test]
    fn cornerless_polynomials_evaluate_to_their_constant() {
        let amp = evaluate(&AmplitudePoly::one(), &params_2d(3.0, 0.25));
        assert_eq!(amp.re, 1.0);
        assert!(amp.i == 0.0 && amp.j == 0.0 && amp.k == 0.0);
    }

    #[test]
    fn worked_two_dimensional_value() {
        // {1: -i, 2: -2} at μ = 0.1 gives -0.02 - 0.1i.
        let poly = AmplitudePoly::from_coeffs([
            (1, -Quaternion::unit_i()),
            (2, Quaternion::from_integers(-2, 0, 0, 0)),
        ]);
        let params = params_2d(1.0, 0.1);
        assert!((params.mu() - 0.1).abs() < TOLERANCE);
        let amp = evaluate(&poly, &params);
        assert!((amp.re - (-0.02)).abs() < TOLERANCE);
        assert!((amp.i - (-0.1)).abs() < TOLERANCE);
        assert_eq!(amp.j, 0.0);
        assert_eq!(amp.k, 0.0);

        let angle = phase(&amp).unwrap();
        let expected = (-0.02 / (0.02_f64.powi(2) + 0.1_f64.powi(2)).sqrt()).acos();
        assert!((angle - expected).abs() < TOLERANCE);
        assert!((angle - 1.768192).abs() < 1e-5);
    }

    #[test]
    fn four_dimensional_coupling_includes_root_three() {
        let params =
            EvaluationParams::new(2.0, 0.5, Dim::Four, WeightConvention::Signed).unwrap();
        assert!((params.mu() - 3.0_f64.sqrt()).abs() < TOLERANCE);
    }

    #[test]
    fn phase_of_axis_units() {
        let one = evaluate(&AmplitudePoly::one(), &params_2d(1.0, 1.0));
        assert_eq!(phase(&one).unwrap(), 0.0);

        let i_poly =
            AmplitudePoly::from_coeffs([(0, GroupUnit::I.quaternion())]);
        let amp = evaluate(&i_poly, &params_2d(1.0, 1.0));
        assert!((phase(&amp).unwrap() - std::f64::consts::FRAC_PI_2).abs() < TOLERANCE);

        let minus_one =
            AmplitudePoly::from_coeffs([(0, -Quaternion::one())]);
        let amp = evaluate(&minus_one, &params_2d(1.0, 1.0));
        assert!((phase(&amp).unwrap() - std::f64::consts::PI).abs() < TOLERANCE);
    }

    #[test]
    fn zero_amplitude_has_no_phase() {
        let amp = evaluate(&AmplitudePoly::zero(), &params_2d(1.0, 1.0));
        assert!(matches!(phase(&amp), Err(Error::UndefinedPhase)));
    }

    #[test]
    fn step_length_scales_inversely_with_mass() {
        assert_eq!(effective_step_length(1.0, 1.0, 1.0).unwrap(), 1.0);
        assert_eq!(effective_step_length(2.0, 1.0, 1.0).unwrap(), 0.5);
        let a = effective_step_length(3.0, 6.62607015e-34, 2.99792458e8).unwrap();
        let b = effective_step_length(6.0, 6.62607015e-34, 2.99792458e8).unwrap();
        assert!((a / b - 2.0).abs() < TOLERANCE);
        assert!(matches!(
            effective_step_length(0.0, 1.0, 1.0),
            Err(Error::NonPositive("mass"))
        ));
    }

    #[test]
    fn parameter_validation() {
        assert!(matches!(
            EvaluationParams::new(-1.0, 1.0, Dim::Two, WeightConvention::Signed),
            Err(Error::NonPositive("mass"))
        ));
        assert!(matches!(
            EvaluationParams::new(1.0, f64::NAN, Dim::Two, WeightConvention::Signed),
            Err(Error::NonPositive("step"))
        ));
    }
}
