use serde::Serialize;
use walks_core::series::{verify_identity, Identity};

use crate::output::{emit, fail, to_json, CliError};
use crate::{IdentityName, OutputFormat, VerifyArgs};

#[derive(Serialize)]
struct VerifyReport {
    identity: String,
    order: usize,
    holds: bool,
    first_failure: Option<String>,
}

pub fn run(args: VerifyArgs) -> Result<i32, CliError> {
    let identity = match args.identity {
        IdentityName::Main => Identity::Main,
        IdentityName::KnightKernel => Identity::KnightKernel,
        IdentityName::Diagonal => Identity::Diagonal,
        IdentityName::Main2 => Identity::Main2,
    };
    let report = verify_identity(identity, args.order).map_err(|e| CliError(e.to_string()))?;
    let out = VerifyReport {
        identity: identity.to_string(),
        order: args.order,
        holds: report.holds,
        first_failure: report.first_failure.map(|t| t.to_string()),
    };
    match args.format {
        OutputFormat::Pretty => {
            let line = if out.holds {
                "holds".to_string()
            } else {
                format!("fails at {}", out.first_failure.as_deref().unwrap_or("?"))
            };
            emit(&None, &line)?;
        }
        OutputFormat::Json => emit(&None, &to_json(&out))?,
        OutputFormat::Csv => return fail("verify has no csv form"),
    }
    Ok(if out.holds { 0 } else { 1 })
}
