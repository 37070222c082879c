//! REST routes over the session store.
//!
//! | method | path                   | body             |
//! |--------|------------------------|------------------|
//! | POST   | `/sessions`            | [`CreateRequest`] |
//! | GET    | `/sessions/{id}`       |                  |
//! | POST   | `/sessions/{id}/moves` | `{"row": N}`     |
//! | POST   | `/sessions/{id}/undo`  |                  |
//! | GET    | `/sessions/{id}/hint`  |                  |
//!
//! Errors are `{"error": "..."}` with the status code carrying the kind;
//! a rejected move also names its `row`.

use std::path::PathBuf;
use std::sync::{Arc, Mutex};

use axum::body::Bytes;
use axum::extract::{Path, State};
use axum::http::{HeaderValue, StatusCode};
use axum::response::{IntoResponse, Response};
use axum::routing::{get, post};
use axum::{Json, Router};
use kohnert_core::{presets, random_diagram, Diagram, Mode, MoveRecord};
use serde::{Deserialize, Serialize};
use serde_json::json;
use tower_http::cors::{AllowOrigin, Any, CorsLayer};

use crate::session::{PuzzleSession, SessionError, SessionState, SessionStore};

pub const DEFAULT_PORT: u16 = 8071;

#[derive(Clone, Debug)]
pub struct ServiceConfig {
    pub port: u16,
    /// Largest diagram accepted, in cells.
    pub max_cells: usize,
    /// Largest row or column index accepted.
    pub max_coord: u32,
    /// Origin allowed by CORS; `None` allows any.
    pub allowed_origin: Option<String>,
    /// Sessions are loaded from here at startup and written back on shutdown.
    pub snapshot_path: Option<PathBuf>,
}

impl Default for ServiceConfig {
    fn default() -> Self {
        Self {
            port: DEFAULT_PORT,
            max_cells: 256,
            max_coord: 64,
            allowed_origin: None,
            snapshot_path: None,
        }
    }
}

#[derive(Clone)]
pub struct AppState {
    pub store: Arc<SessionStore>,
    pub config: Arc<ServiceConfig>,
}

impl AppState {
    pub fn new(store: SessionStore, config: ServiceConfig) -> Self {
        Self {
            store: Arc::new(store),
            config: Arc::new(config),
        }
    }
}

#[derive(Clone, Debug, Deserialize)]
pub struct RandomSpec {
    pub rows: u32,
    pub cols: u32,
    pub density: f64,
    pub seed: u64,
}

/// Exactly one of `diagram`, `cells_text`, `preset`, `random` must be given.
#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CreateRequest {
    pub mode: Mode,
    pub diagram: Option<Diagram>,
    /// Cell-list text, one `"<row> <col>"` per line.
    pub cells_text: Option<String>,
    pub preset: Option<String>,
    pub random: Option<RandomSpec>,
}

#[derive(Debug, Deserialize)]
struct MoveRequest {
    row: u32,
}

#[derive(Serialize)]
struct MoveResponse {
    #[serde(flatten)]
    state: SessionState,
    #[serde(rename = "move")]
    record: MoveRecord,
}

#[derive(Serialize)]
struct HintResponse {
    mode: Mode,
    optimal_row: Option<u32>,
}

#[derive(Debug)]
pub struct ApiError {
    status: StatusCode,
    message: String,
    row: Option<u32>,
}

impl ApiError {
    fn new(status: StatusCode, message: impl Into<String>) -> Self {
        Self {
            status,
            message: message.into(),
            row: None,
        }
    }

    fn bad_request(message: impl Into<String>) -> Self {
        Self::new(StatusCode::BAD_REQUEST, message)
    }

    fn not_found(id: &str) -> Self {
        Self::new(StatusCode::NOT_FOUND, format!("no session {id}"))
    }
}

impl From<SessionError> for ApiError {
    fn from(e: SessionError) -> Self {
        let row = match e {
            SessionError::TrivialMove { row } => Some(row),
            _ => None,
        };
        let status = match e {
            SessionError::BadSnapshot { .. } => StatusCode::INTERNAL_SERVER_ERROR,
            _ => StatusCode::CONFLICT,
        };
        Self {
            status,
            message: e.to_string(),
            row,
        }
    }
}

impl IntoResponse for ApiError {
    fn into_response(self) -> Response {
        let body = match self.row {
            Some(row) => json!({ "error": self.message, "row": row }),
            None => json!({ "error": self.message }),
        };
        (self.status, Json(body)).into_response()
    }
}

fn parse_json<T: for<'de> Deserialize<'de>>(body: &Bytes) -> Result<T, ApiError> {
    serde_json::from_slice(body).map_err(|e| ApiError::bad_request(format!("malformed request: {e}")))
}

fn too_large(what: String) -> ApiError {
    ApiError::new(StatusCode::PAYLOAD_TOO_LARGE, what)
}

fn check_size(d: &Diagram, config: &ServiceConfig) -> Result<(), ApiError> {
    if d.len() > config.max_cells {
        return Err(too_large(format!("{} cells exceeds the cap of {}", d.len(), config.max_cells)));
    }
    let extent = d.top_row().max(d.rightmost_col());
    if extent > config.max_coord {
        return Err(too_large(format!("coordinate {extent} exceeds the cap of {}", config.max_coord)));
    }
    Ok(())
}

fn initial_diagram(req: &CreateRequest, config: &ServiceConfig) -> Result<Diagram, ApiError> {
    let given = [
        req.diagram.is_some(),
        req.cells_text.is_some(),
        req.preset.is_some(),
        req.random.is_some(),
    ];
    if given.iter().filter(|&&g| g).count() != 1 {
        return Err(ApiError::bad_request(
            "give exactly one of diagram, cells_text, preset, random",
        ));
    }
    let d = if let Some(d) = &req.diagram {
        d.clone()
    } else if let Some(text) = &req.cells_text {
        Diagram::parse_cell_list(text).map_err(|e| ApiError::bad_request(e.to_string()))?
    } else if let Some(name) = &req.preset {
        presets::by_name(name).ok_or_else(|| ApiError::bad_request(format!("unknown preset {name:?}")))?
    } else {
        let spec = req.random.as_ref().expect("one source is present");
        if !(0.0..=1.0).contains(&spec.density) {
            return Err(ApiError::bad_request("density must lie in [0, 1]"));
        }
        if spec.rows.max(spec.cols) > config.max_coord {
            return Err(too_large(format!("random box exceeds the cap of {}", config.max_coord)));
        }
        random_diagram(spec.rows, spec.cols, spec.density, spec.seed)
    };
    check_size(&d, config)?;
    Ok(d)
}

fn session_or_404(state: &AppState, id: &str) -> Result<Arc<Mutex<PuzzleSession>>, ApiError> {
    state.store.get(id).ok_or_else(|| ApiError::not_found(id))
}

fn lock(session: &Mutex<PuzzleSession>) -> std::sync::MutexGuard<'_, PuzzleSession> {
    // a panic inside a handler cannot leave a session half-updated
    session.lock().unwrap_or_else(|poisoned| poisoned.into_inner())
}

async fn create_session(State(state): State<AppState>, body: Bytes) -> Result<Response, ApiError> {
    let req: CreateRequest = parse_json(&body)?;
    let initial = initial_diagram(&req, &state.config)?;
    let session = state.store.create(req.mode, initial);
    let view = lock(&session).state();
    log::info!("created session {} ({})", view.id, view.mode);
    Ok((StatusCode::CREATED, Json(view)).into_response())
}

async fn get_state(State(state): State<AppState>, Path(id): Path<String>) -> Result<Json<SessionState>, ApiError> {
    let session = session_or_404(&state, &id)?;
    let view = lock(&session).state();
    Ok(Json(view))
}

async fn apply_move(
    State(state): State<AppState>,
    Path(id): Path<String>,
    body: Bytes,
) -> Result<Response, ApiError> {
    let session = session_or_404(&state, &id)?;
    let req: MoveRequest = parse_json(&body)?;
    if req.row == 0 {
        return Err(ApiError::bad_request("rows are numbered from 1"));
    }
    let mut guard = lock(&session);
    let record = guard.apply(req.row)?;
    let body = MoveResponse {
        state: guard.state(),
        record,
    };
    Ok(Json(body).into_response())
}

async fn undo(State(state): State<AppState>, Path(id): Path<String>) -> Result<Json<SessionState>, ApiError> {
    let session = session_or_404(&state, &id)?;
    let mut guard = lock(&session);
    guard.undo()?;
    Ok(Json(guard.state()))
}

async fn hint(State(state): State<AppState>, Path(id): Path<String>) -> Result<Response, ApiError> {
    let session = session_or_404(&state, &id)?;
    let guard = lock(&session);
    let body = HintResponse {
        mode: guard.mode(),
        optimal_row: guard.hint(),
    };
    Ok(Json(body).into_response())
}

fn cors(config: &ServiceConfig) -> CorsLayer {
    let origin = match config.allowed_origin.as_deref().map(HeaderValue::from_str) {
        Some(Ok(value)) => AllowOrigin::exact(value),
        Some(Err(_)) => {
            log::warn!("ignoring unparsable CORS origin; allowing any");
            AllowOrigin::any()
        }
        None => AllowOrigin::any(),
    };
    CorsLayer::new()
        .allow_origin(origin)
        .allow_methods(Any)
        .allow_headers(Any)
}

pub fn router(state: AppState) -> Router {
    let cors = cors(&state.config);
    Router::new()
        .route("/sessions", post(create_session))
        .route("/sessions/{id}", get(get_state))
        .route("/sessions/{id}/moves", post(apply_move))
        .route("/sessions/{id}/undo", post(undo))
        .route("/sessions/{id}/hint", get(hint))
        .layer(cors)
        .with_state(state)
}
