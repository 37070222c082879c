//! HTTP service for the Kohnert puzzle: sessions, moves, undo and hints.

pub mod api;
pub mod session;

use std::io;
use std::net::SocketAddr;
use std::path::Path;

use thiserror::Error;

pub use api::{router, AppState, ServiceConfig, DEFAULT_PORT};
pub use session::{PuzzleSession, SessionError, SessionSnapshot, SessionState, SessionStore};

#[derive(Debug, Error)]
pub enum ServeError {
    #[error("cannot bind port {port}: {source}")]
    Bind { port: u16, source: io::Error },
    #[error("snapshot file {path}: {source}")]
    SnapshotIo { path: String, source: io::Error },
    #[error("snapshot file {path} is not valid JSON: {source}")]
    SnapshotFormat { path: String, source: serde_json::Error },
    #[error(transparent)]
    Session(#[from] SessionError),
    #[error("server failed: {0}")]
    Server(io::Error),
}

/// Reads a store from `path`; a missing file gives an empty store.
pub fn load_store(path: &Path) -> Result<SessionStore, ServeError> {
    let shown = path.display().to_string();
    let text = match std::fs::read_to_string(path) {
        Ok(text) => text,
        Err(e) if e.kind() == io::ErrorKind::NotFound => return Ok(SessionStore::new()),
        Err(source) => return Err(ServeError::SnapshotIo { path: shown, source }),
    };
    let snapshots: Vec<SessionSnapshot> =
        serde_json::from_str(&text).map_err(|source| ServeError::SnapshotFormat { path: shown, source })?;
    Ok(SessionStore::restore(snapshots)?)
}

pub fn save_store(store: &SessionStore, path: &Path) -> Result<(), ServeError> {
    let text = serde_json::to_string_pretty(&store.snapshot()).expect("snapshots serialize");
    std::fs::write(path, text).map_err(|source| ServeError::SnapshotIo {
        path: path.display().to_string(),
        source,
    })
}

/// Serves until ctrl-c, then writes the snapshot file if one is configured.
pub async fn serve(config: ServiceConfig) -> Result<(), ServeError> {
    let store = match &config.snapshot_path {
        Some(path) => load_store(path)?,
        None => SessionStore::new(),
    };
    let snapshot_path = config.snapshot_path.clone();
    let port = config.port;
    let state = AppState::new(store, config);
    let app = router(state.clone());

    let addr = SocketAddr::from(([0, 0, 0, 0], port));
    let listener = tokio::net::TcpListener::bind(addr)
        .await
        .map_err(|source| ServeError::Bind { port, source })?;
    log::info!("listening on {addr} with {} restored sessions", state.store.len());

    axum::serve(listener, app)
        .with_graceful_shutdown(async {
            if let Err(e) = tokio::signal::ctrl_c().await {
                log::error!("cannot listen for ctrl-c: {e}");
                std::future::pending::<()>().await;
            }
            log::info!("shutting down");
        })
        .await
        .map_err(ServeError::Server)?;

    if let Some(path) = snapshot_path {
        save_store(&state.store, &path)?;
        log::info!("saved {} sessions to {}", state.store.len(), path.display());
    }
    Ok(())
}
