//! Numerical toolkit for the two-dimensional anyon gas.
//!
//! The crate collects the computable structures of intermediate quantum
//! statistics in the plane:
//!
//! - [`stats`]: the abelian statistics parameter and its periodizations
//!   (2-, N- and infinity-fractionality, including the exact rational
//!   "popcorn" evaluation),
//! - [`braid`]: unitary braid-group representations (abelian, unitarized
//!   Burau at three strands, Ising and Fibonacci in a fusion-path basis)
//!   with pair-exchange spectra and exclusion parameters,
//! - [`spectra`]: closed-form two-anyon spectra, rigorous lower/upper
//!   bounds for the trapped and homogeneous gas, and quadrature checkers
//!   for Hardy, diamagnetic and Lieb-Thirring inequalities,
//! - [`gauge`]: statistics transmutation in the magnetic picture --
//!   singular gauge phases, Aharonov-Bohm vector potentials, flux
//!   circulation and the extended-anyon parameters,
//! - [`dft`]: Thomas-Fermi-type density functionals on a radial grid
//!   (fermionic, constant-field, average-field, magnetic with Landau
//!   filling, extended-gas local density, semiclassical Vlasov),
//! - [`afm`]: a 2D minimizer for the average-field functional with a
//!   self-generated magnetic field, vortex detection and the
//!   effective-coefficient fit,
//! - [`polaron`]: truncated Fock-space diagonalization of the
//!   flux-attachment toy model for the two-anyon relative problem.
//!
//! Units are fixed globally to `hbar = 2m = 1`, so a free particle has
//! kinetic operator `-laplacian` and the harmonic trap `V(r) = r^2`
//! corresponds to oscillator frequency `hbar*omega = 2`.

pub mod afm;
pub mod bessel;
pub mod braid;
pub mod dft;
pub mod eigen;
pub mod error;
pub mod fusion;
pub mod gauge;
pub mod grid2d;
pub mod linalg;
pub mod polaron;
pub mod radial;
pub mod spectra;
pub mod stats;

pub use afm::{Grid2D, MinimizerConfig, VortexReport, WaveField2D};
pub use braid::{AnyonModel, BraidWord, Chirality, ExchangeRep, ExchangeSpectrum, RelationReport};
pub use dft::{CoefficientModel, TrapPotential};
pub use error::CoreError;
pub use gauge::{FluxModel, ParticleConfig};
pub use polaron::{FockTruncation, LParity, ToyMode, ToyModelOperator, ToyParams};
pub use radial::{RadialDensity, RadialGrid};
pub use spectra::{BoundReport, HarmonicTrap, InequalityKind, TwoBodyTrialState};
pub use stats::StatisticsParameter;

/// Result alias used throughout the crate.
pub type Result<T> = std::result::Result<T, CoreError>;
