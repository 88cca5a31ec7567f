//! Small shared types.

/// Verdict for a single point of the complex plane.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SpectrumStatus {
    /// A resolvent exists and was (or could be) constructed.
    Resolved,
    /// The point belongs to the spectrum.
    Spectral,
    /// Too close to call at the working tolerance, or not classified.
    Indeterminate,
}

impl std::fmt::Display for SpectrumStatus {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            SpectrumStatus::Resolved => "Resolved",
            SpectrumStatus::Spectral => "Spectral",
            SpectrumStatus::Indeterminate => "Indeterminate",
        };
        f.write_str(s)
    }
}
