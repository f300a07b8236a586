//! Stateless HTTP front end. `POST /v1/analyze` runs one full analysis of
//! the diagram in the request body; `GET /v1/health` reports liveness.

pub mod analysis;

use std::sync::atomic::{AtomicBool, Ordering};
use std::sync::Arc;

use axum::extract::rejection::JsonRejection;
use axum::http::StatusCode;
use axum::response::{IntoResponse, Response};
use axum::routing::{get, post};
use axum::{Json, Router};
use serde::{Deserialize, Serialize};
use tower_http::cors::CorsLayer;

pub use analysis::{analyze, AnalyzeRequest, AnalyzeResponse, ErrorBody, ErrorKind};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Health {
    pub status: String,
    pub version: String,
}

pub fn router() -> Router {
    Router::new()
        .route("/v1/analyze", post(analyze_handler))
        .route("/v1/health", get(health))
        .layer(CorsLayer::permissive())
}

async fn health() -> Json<Health> {
    Json(Health {
        status: "ok".into(),
        version: VERSION.into(),
    })
}

fn status_of(kind: ErrorKind) -> StatusCode {
    match kind {
        ErrorKind::Request | ErrorKind::Parse => StatusCode::BAD_REQUEST,
        ErrorKind::Roles => StatusCode::UNPROCESSABLE_ENTITY,
        ErrorKind::Internal => StatusCode::INTERNAL_SERVER_ERROR,
    }
}

/// Raises the flag when dropped, which happens when the client goes away
/// before the analysis finishes.
struct CancelOnDrop(Arc<AtomicBool>);

impl Drop for CancelOnDrop {
    fn drop(&mut self) {
        self.0.store(true, Ordering::Relaxed);
    }
}

async fn analyze_handler(payload: Result<Json<AnalyzeRequest>, JsonRejection>) -> Response {
    let req = match payload {
        Ok(Json(req)) => req,
        Err(rejection) => {
            let body = ErrorBody::new(ErrorKind::Request, rejection.body_text());
            return (rejection.status(), Json(body)).into_response();
        }
    };
    let cancel = Arc::new(AtomicBool::new(false));
    let _guard = CancelOnDrop(cancel.clone());
    let outcome = tokio::task::spawn_blocking(move || analyze(&req, &cancel)).await;
    match outcome {
        Ok(Ok(resp)) => {
            tracing::debug!(total_us = resp.timing.total_us, "analyzed");
            Json(resp).into_response()
        }
        Ok(Err(body)) => (status_of(body.error), Json(body)).into_response(),
        Err(e) => {
            tracing::error!("analysis task failed: {e}");
            let body = ErrorBody::new(ErrorKind::Internal, "analysis failed");
            (StatusCode::INTERNAL_SERVER_ERROR, Json(body)).into_response()
        }
    }
}
