use std::net::SocketAddr;
use std::path::PathBuf;

use axum::body::Bytes;
use axum::http::StatusCode;
use axum::response::{IntoResponse, Response};
use axum::routing::{get, post};
use axum::{Json, Router};
use serde_json::json;
use tower_http::services::ServeDir;

use venus_core::api;

use crate::commands::{Failure, ServeArgs};

/// Routes of the stateless JSON service.
pub fn router(static_dir: Option<PathBuf>) -> Router {
    let api = Router::new()
        .route("/api/health", get(health))
        .route("/api/state/geometry", post(geometry))
        .route("/api/circuit/frames", post(frames));
    match static_dir {
        Some(dir) => api.fallback_service(ServeDir::new(dir)),
        None => api,
    }
}

async fn health() -> Json<serde_json::Value> {
    Json(api::health())
}

fn not_utf8() -> Response {
    let body = json!({
        "schema_version": api::SCHEMA_VERSION,
        "diagnostics": [{"severity": "error", "location": {"pointer": ""}, "message": "request body is not UTF-8"}],
    });
    (StatusCode::BAD_REQUEST, Json(body)).into_response()
}

async fn geometry(body: Bytes) -> Response {
    let Ok(text) = std::str::from_utf8(&body) else {
        return not_utf8();
    };
    match api::state_geometry(text) {
        Ok(r) => Json(r).into_response(),
        Err(e) => (StatusCode::BAD_REQUEST, Json(e)).into_response(),
    }
}

async fn frames(body: Bytes) -> Response {
    let Ok(text) = std::str::from_utf8(&body) else {
        return not_utf8();
    };
    match api::circuit_frames(text) {
        Ok(r) => Json(r).into_response(),
        Err(e) => (StatusCode::BAD_REQUEST, Json(e)).into_response(),
    }
}

pub async fn serve(
    listener: tokio::net::TcpListener,
    static_dir: Option<PathBuf>,
) -> std::io::Result<()> {
    axum::serve(listener, router(static_dir)).await
}

pub(crate) fn serve_blocking(args: &ServeArgs) -> Result<Vec<String>, Failure> {
    let startup = |msg: String| Failure {
        code: 1,
        messages: vec![msg],
    };
    let addr: SocketAddr = format!("{}:{}", args.bind, args.port)
        .parse()
        .map_err(|e| startup(format!("invalid bind address: {e}")))?;
    let runtime = tokio::runtime::Runtime::new().map_err(|e| startup(e.to_string()))?;
    runtime.block_on(async {
        let listener = tokio::net::TcpListener::bind(addr)
            .await
            .map_err(|e| startup(format!("cannot listen on {addr}: {e}")))?;
        eprintln!("listening on http://{addr}");
        serve(listener, args.static_dir.clone())
            .await
            .map_err(|e| startup(e.to_string()))?;
        Ok(Vec::new())
    })
}
