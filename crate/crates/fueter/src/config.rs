use std::sync::Arc;

use fueter_core::operators::MultiplicityMode;
use fueter_core::{AlgebraSpec, HypercomplexBasis, OperatorContext, SetPartition};

use crate::error::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Text,
    Dot,
    Jsonl,
}

/// Inputs shared by every command.
#[derive(Clone, Debug)]
pub struct CliConfig {
    /// `clifford:N` or `octonion`.
    pub algebra: String,
    /// Comma-separated names starting with `1`; the standard basis if absent.
    pub basis: Option<String>,
    /// Partition string; the whole set `{1..n}` if absent.
    pub partition: Option<String>,
    pub multiplicities: MultiplicityMode,
    /// One distinguished index per block, comma-separated.
    pub alpha: Option<String>,
    pub format: Format,
}

impl Default for CliConfig {
    fn default() -> Self {
        CliConfig {
            algebra: "clifford:2".to_string(),
            basis: None,
            partition: None,
            multiplicities: MultiplicityMode::Canonical,
            alpha: None,
            format: Format::Text,
        }
    }
}

impl CliConfig {
    pub fn basis(&self) -> Result<Arc<HypercomplexBasis>, CliError> {
        let spec = AlgebraSpec::parse(&self.algebra)?;
        match &self.basis {
            None => Ok(HypercomplexBasis::standard(&spec)),
            Some(text) => {
                let names: Vec<&str> = text.split(',').map(str::trim).collect();
                Ok(HypercomplexBasis::from_names(&spec, &names)?)
            }
        }
    }

    pub fn partition(&self, n: usize) -> Result<SetPartition, CliError> {
        match &self.partition {
            None => Ok(SetPartition::whole(n)),
            Some(text) => Ok(SetPartition::parse(text, Some(n))?),
        }
    }

    fn alphas(&self) -> Result<Option<Vec<usize>>, CliError> {
        let Some(text) = &self.alpha else {
            return Ok(None);
        };
        text.split(',')
            .map(|s| {
                s.trim()
                    .parse()
                    .map_err(|_| CliError::Usage(format!("--alpha: bad index `{}`", s.trim())))
            })
            .collect::<Result<Vec<_>, _>>()
            .map(Some)
    }

    pub fn context(&self) -> Result<OperatorContext, CliError> {
        let basis = self.basis()?;
        let partition = self.partition(basis.n())?;
        let alphas = self.alphas()?;
        if let Some(a) = &alphas {
            if a.len() != partition.len() {
                return Err(CliError::Usage(format!(
                    "--alpha gives {} indices for {} blocks",
                    a.len(),
                    partition.len()
                )));
            }
        }
        Ok(OperatorContext::with_mode(&basis, partition, self.multiplicities, alphas.as_deref())?)
    }

    pub fn mode_name(&self) -> &'static str {
        match self.multiplicities {
            MultiplicityMode::Canonical => "canonical",
            MultiplicityMode::Uniform => "uniform",
        }
    }
}
