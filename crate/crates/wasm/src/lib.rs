//! Browser bindings. Every export takes and returns JSON text so the page
//! talks to the same request handlers as the HTTP service.

use venus_core::api::{self, ErrorResponse};
use venus_core::{render, Diagram, RenderTheme};
use wasm_bindgen::prelude::wasm_bindgen;

fn to_json<T: serde::Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("response serializes")
}

fn answer<T: serde::Serialize>(result: Result<T, ErrorResponse>) -> String {
    match result {
        Ok(r) => to_json(&r),
        Err(e) => to_json(&e),
    }
}

/// Geometry request body in, geometry or error response out.
#[wasm_bindgen(js_name = stateGeometry)]
pub fn state_geometry(body: &str) -> String {
    answer(api::state_geometry(body))
}

/// Circuit (bare or wrapped in `{"circuit": ...}`) in, frames out.
#[wasm_bindgen(js_name = circuitFrames)]
pub fn circuit_frames(body: &str) -> String {
    answer(api::circuit_frames(body))
}

/// Diagram JSON in, SVG document out.
#[wasm_bindgen(js_name = renderSvg)]
pub fn render_svg(diagram: &str) -> Result<String, String> {
    let diagram: Diagram = serde_json::from_str(diagram).map_err(|e| e.to_string())?;
    Ok(render(&diagram, &RenderTheme::default()))
}

#[wasm_bindgen]
pub fn version() -> String {
    env!("CARGO_PKG_VERSION").to_owned()
}
