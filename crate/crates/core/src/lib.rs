//! Online test-time adaptation for 3D skeletal pose estimation on a
//! self-contained synthetic streaming harness.
//!
//! The pipeline has two learnable parts: a pose estimator that maps per-frame
//! observation features to skeleton pose parameters, and a temporal motion
//! denoiser whose latent space carries a residual EMA-clustered codebook.
//! At test time the two are adapted alternately on unlabeled streaming
//! batches; decoded codebook entries act as regularizing anchor motions and
//! as replay data, and the estimator is soft-reset toward its pre-batch
//! weights after every batch.

pub mod adapt;
pub mod autodiff;
pub mod codebook;
pub mod eval;
pub mod kernels;
pub mod kinematics;
pub mod motion_repr;
pub mod networks;
pub mod pretrain;
pub mod rng;
pub mod stream;

pub use autodiff::{Array, Graph, NodeId};
pub use codebook::ResidualCodebook;
pub use kinematics::{Camera, PoseFrame, Skeleton};
pub use motion_repr::{MotionWindow, PhiSequence, PHI_DIM, WINDOW_LEN};
pub use networks::{MotionDenoiser, PoseEstimatorF, WeightSnapshot};
pub use stream::{DomainShift, ObservationFeature, PersonProfile, StreamBatch};
