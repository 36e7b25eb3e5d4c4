use clap::{Args, Parser, Subcommand, ValueEnum};
use dcoulomb::Sign;

#[derive(Debug, Parser)]
#[command(name = "dcoulomb", version, about = "Dirac–Coulomb special functions, kernels and spectra")]
pub struct Cli {
    /// Write the artifact to this file instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<String>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate a special function.
    Fn(FnArgs),
    /// Green's kernel on a log grid (boundary value for real k).
    Kernel {
        #[command(flatten)]
        point: PointArgs,
        #[arg(long = "k-re", alias = "k", allow_hyphen_values = true)]
        k_re: f64,
        #[arg(long = "k-im", default_value_t = 0.0, allow_hyphen_values = true)]
        k_im: f64,
        /// Side of the real axis for real k.
        #[arg(long, value_enum)]
        side: Option<SideArg>,
        #[command(flatten)]
        grid: GridArgs,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        #[arg(long)]
        verify: bool,
    },
    /// Classification report of a parameter point.
    Classify {
        #[command(flatten)]
        point: PointArgs,
        #[arg(long)]
        verify: bool,
    },
    /// Eigenvalues of a mixed boundary condition.
    Eigs {
        #[command(flatten)]
        point: PointArgs,
        #[arg(long = "kappa-re", alias = "kappa", allow_hyphen_values = true)]
        kappa_re: Option<f64>,
        #[arg(long = "kappa-im", default_value_t = 0.0, allow_hyphen_values = true)]
        kappa_im: f64,
        #[arg(long = "nu-re", alias = "nu", allow_hyphen_values = true)]
        nu_re: Option<f64>,
        #[arg(long = "nu-im", default_value_t = 0.0, allow_hyphen_values = true)]
        nu_im: f64,
        /// Half-width of the square search window.
        #[arg(long, default_value_t = 1e3)]
        window: f64,
        #[arg(long)]
        verify: bool,
    },
    /// Radial channels ω of the d-dimensional operator.
    Channels {
        #[arg(long)]
        dim: u32,
        #[arg(long, allow_hyphen_values = true)]
        ell: i64,
        #[arg(long)]
        verify: bool,
    },
    /// Full scattering amplitude at energies of sign eps.
    Scatter {
        #[command(flatten)]
        point: PointArgs,
        #[arg(long, value_enum)]
        eps: SideArg,
        #[arg(long)]
        verify: bool,
    },
    /// Spectral density on a log grid at real k.
    Density {
        #[command(flatten)]
        point: PointArgs,
        #[arg(long, allow_hyphen_values = true)]
        k: f64,
        #[command(flatten)]
        grid: GridArgs,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        #[arg(long)]
        verify: bool,
    },
}

impl Command {
    pub fn name(&self) -> String {
        match self {
            Command::Fn(_) => "fn",
            Command::Kernel { .. } => "kernel",
            Command::Classify { .. } => "classify",
            Command::Eigs { .. } => "eigs",
            Command::Channels { .. } => "channels",
            Command::Scatter { .. } => "scatter",
            Command::Density { .. } => "density",
        }
        .to_string()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FnName {
    Gamma,
    Digamma,
    #[value(name = "1f1")]
    OneF1,
    #[value(name = "2f1")]
    TwoF1,
    WhittakerI,
    WhittakerK,
    TrigJ,
    TrigH,
    MellinJ,
}

impl FnName {
    pub fn as_str(self) -> &'static str {
        match self {
            FnName::Gamma => "gamma",
            FnName::Digamma => "digamma",
            FnName::OneF1 => "1f1",
            FnName::TwoF1 => "2f1",
            FnName::WhittakerI => "whittaker-i",
            FnName::WhittakerK => "whittaker-k",
            FnName::TrigJ => "trig-j",
            FnName::TrigH => "trig-h",
            FnName::MellinJ => "mellin-j",
        }
    }
}

#[derive(Debug, Args)]
pub struct FnArgs {
    #[arg(long, value_enum)]
    pub name: FnName,
    #[arg(long = "z-re", alias = "z", default_value_t = 0.0, allow_hyphen_values = true)]
    pub z_re: f64,
    #[arg(long = "z-im", default_value_t = 0.0, allow_hyphen_values = true)]
    pub z_im: f64,
    #[arg(long = "beta-re", alias = "beta", default_value_t = 0.0, allow_hyphen_values = true)]
    pub beta_re: f64,
    #[arg(long = "beta-im", default_value_t = 0.0, allow_hyphen_values = true)]
    pub beta_im: f64,
    #[arg(long = "m-re", alias = "m", default_value_t = 0.5, allow_hyphen_values = true)]
    pub m_re: f64,
    #[arg(long = "m-im", default_value_t = 0.0, allow_hyphen_values = true)]
    pub m_im: f64,
    #[arg(long = "a-re", alias = "a", default_value_t = 0.0, allow_hyphen_values = true)]
    pub a_re: f64,
    #[arg(long = "a-im", default_value_t = 0.0, allow_hyphen_values = true)]
    pub a_im: f64,
    #[arg(long = "b-re", alias = "b", default_value_t = 0.0, allow_hyphen_values = true)]
    pub b_re: f64,
    #[arg(long = "b-im", default_value_t = 0.0, allow_hyphen_values = true)]
    pub b_im: f64,
    #[arg(long = "c-re", alias = "c", default_value_t = 1.0, allow_hyphen_values = true)]
    pub c_re: f64,
    #[arg(long = "c-im", default_value_t = 0.0, allow_hyphen_values = true)]
    pub c_im: f64,
    /// Scale v of mellin-j.
    #[arg(long, default_value_t = 1.0)]
    pub v: f64,
    /// Mellin variable s of mellin-j.
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    pub s: f64,
    /// Sign of trig-h.
    #[arg(long, value_enum)]
    pub sign: Option<SideArg>,
    #[arg(long)]
    pub verify: bool,
}

/// A point of the parameter manifold. μ defaults to the principal root of
/// ω² − λ²; `--ray a b` (with `--ray-im`) selects the zero fiber.
#[derive(Debug, Args)]
pub struct PointArgs {
    #[arg(long = "omega-re", alias = "omega", default_value_t = 0.0, allow_hyphen_values = true)]
    pub omega_re: f64,
    #[arg(long = "omega-im", default_value_t = 0.0, allow_hyphen_values = true)]
    pub omega_im: f64,
    #[arg(long = "lambda-re", alias = "lambda", default_value_t = 0.0, allow_hyphen_values = true)]
    pub lambda_re: f64,
    #[arg(long = "lambda-im", default_value_t = 0.0, allow_hyphen_values = true)]
    pub lambda_im: f64,
    #[arg(long = "mu-re", alias = "mu", allow_hyphen_values = true)]
    pub mu_re: Option<f64>,
    #[arg(long = "mu-im", default_value_t = 0.0, allow_hyphen_values = true)]
    pub mu_im: f64,
    #[arg(long, num_args = 2, value_names = ["A", "B"], allow_hyphen_values = true)]
    pub ray: Option<Vec<f64>>,
    #[arg(long = "ray-im", num_args = 2, value_names = ["A_IM", "B_IM"], allow_hyphen_values = true)]
    pub ray_im: Option<Vec<f64>>,
}

/// Log-spaced grid; the y axis defaults to the x axis.
#[derive(Debug, Args)]
pub struct GridArgs {
    #[arg(long = "x-min", default_value_t = 0.1)]
    pub x_min: f64,
    #[arg(long = "x-max", default_value_t = 10.0)]
    pub x_max: f64,
    #[arg(long, default_value_t = 20)]
    pub nx: usize,
    #[arg(long = "y-min")]
    pub y_min: Option<f64>,
    #[arg(long = "y-max")]
    pub y_max: Option<f64>,
    #[arg(long)]
    pub ny: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SideArg {
    Plus,
    Minus,
}

impl SideArg {
    pub fn sign(self) -> Sign {
        match self {
            SideArg::Plus => Sign::Plus,
            SideArg::Minus => Sign::Minus,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            SideArg::Plus => "plus",
            SideArg::Minus => "minus",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}
