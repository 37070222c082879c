use std::io::Read;

use kohnert_core::{presets, Diagram};

use crate::{CliError, InputArgs};

/// Cell-list text, or JSON when the text starts with `{`: either a diagram
/// `{"cells": [[r, c], ...]}` or any report carrying one under `"diagram"`.
pub fn parse_diagram(text: &str, origin: &str) -> Result<Diagram, CliError> {
    if text.trim_start().starts_with('{') {
        let bad = |e: serde_json::Error| CliError::Input(format!("{origin}: {e}"));
        let mut value: serde_json::Value = serde_json::from_str(text).map_err(bad)?;
        if let Some(inner) = value.get_mut("diagram") {
            value = inner.take();
        }
        serde_json::from_value(value).map_err(bad)
    } else {
        Diagram::parse_cell_list(text).map_err(|e| CliError::Input(format!("{origin}: {e}")))
    }
}

pub fn read_diagram(args: &InputArgs) -> Result<Diagram, CliError> {
    if let Some(name) = &args.preset {
        return presets::by_name(name).ok_or_else(|| {
            CliError::Usage(format!("unknown preset {name:?}; expected one of {}", presets::NAMES.join(", ")))
        });
    }
    if let Some(inline) = &args.diagram {
        return parse_diagram(&inline.replace(';', "\n"), "--diagram");
    }
    let path = args.input.as_deref().expect("clap requires one input source");
    let text = if path == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| CliError::Input(format!("stdin: {e}")))?;
        buf
    } else {
        std::fs::read_to_string(path).map_err(|e| CliError::Input(format!("{path}: {e}")))?
    };
    parse_diagram(&text, path)
}
