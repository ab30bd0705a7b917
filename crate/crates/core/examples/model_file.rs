//! Loading sources and channels from JSON and writing them back.
//!
//! cargo run --example model_file -- crates/core/examples/models/ternary_xor.json

use sumrate::bounds::{self, OptimizerConfig};
use sumrate::model::{emit_model, parse_model, ParseOptions};

fn main() -> sumrate::Result<()> {
    let path = std::env::args()
        .nth(1)
        .unwrap_or_else(|| concat!(env!("CARGO_MANIFEST_DIR"), "/examples/models/ternary_xor.json").into());
    let model = parse_model(&path, ParseOptions::default())?;
    println!("{}", model.name.as_deref().unwrap_or("(unnamed)"));

    if let (Some(src), Some(ch)) = (&model.source, &model.channel) {
        let cfg = OptimizerConfig {
            restarts: 8,
            ..OptimizerConfig::default()
        };
        let r = bounds::assess(src, ch, &cfg)?;
        println!("{}", serde_json::to_string_pretty(&r).expect("report serializes"));
    }

    println!("{}", emit_model(&model));
    Ok(())
}
