//! JSON instance format: ground, up to two families, and an optional
//! topology, all as arrays of unique label strings.

use serde::Deserialize;

use crate::family::{NestError, SetFamily};
use crate::topology::FiniteTopology;

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Instance {
    pub ground: Vec<String>,
    #[serde(default)]
    pub family: Option<Vec<Vec<String>>>,
    #[serde(default)]
    pub family2: Option<Vec<Vec<String>>>,
    #[serde(default)]
    pub topology: Option<Vec<Vec<String>>>,
}

impl Instance {
    pub fn family(&self) -> Result<SetFamily, NestError> {
        match &self.family {
            Some(f) => SetFamily::new(self.ground.clone(), f),
            None => Err(NestError::Precondition("missing \"family\"".into())),
        }
    }

    pub fn family2(&self) -> Result<SetFamily, NestError> {
        match &self.family2 {
            Some(f) => SetFamily::new(self.ground.clone(), f),
            None => Err(NestError::Precondition("missing \"family2\"".into())),
        }
    }

    /// Topology closure is validated, not inferred.
    pub fn topology(&self) -> Result<FiniteTopology, NestError> {
        match &self.topology {
            Some(t) => FiniteTopology::new(self.ground.clone(), t),
            None => Err(NestError::Precondition("missing \"topology\"".into())),
        }
    }
}
