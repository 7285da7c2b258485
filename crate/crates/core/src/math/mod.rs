pub mod activation;
pub mod dawson;
pub mod erf;
mod tables;

pub use activation::{
    moment_activation, moment_activation_grad, ActivationJacobian, ActivationOutput,
    CurrentMoments, SIGMA_CUTOFF,
};
pub use dawson::{dawson_g, dawson_g_int, dawson_g_prime, dawson_h, dawson_h_int};
pub use erf::{erf, erfc, erfcx, normal_cdf};
