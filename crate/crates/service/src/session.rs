//! Puzzle sessions and the in-memory store that holds them.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, RwLock};
use std::time::{SystemTime, UNIX_EPOCH};

use kohnert_core::{max_moves, min_moves, Chain, Diagram, Mode, MoveRecord};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum SessionError {
    #[error("the move at row {row} is trivial")]
    TrivialMove { row: u32 },
    #[error("nothing to undo")]
    EmptyHistory,
    #[error("snapshot for session {id} does not replay: {reason}")]
    BadSnapshot { id: String, reason: String },
}

fn now_ms() -> u64 {
    SystemTime::now()
        .duration_since(UNIX_EPOCH)
        .map_or(0, |d| d.as_millis() as u64)
}

/// 128 random bits as lowercase hex.
pub fn new_session_id() -> String {
    format!("{:032x}", rand::random::<u128>())
}

/// One player's game: an initial diagram and the nontrivial moves played so far.
#[derive(Clone, Debug)]
pub struct PuzzleSession {
    id: String,
    mode: Mode,
    chain: Chain,
    created_ms: u64,
    updated_ms: u64,
}

/// Everything the player needs to render the board.
#[derive(Clone, Debug, Serialize)]
pub struct SessionState {
    pub id: String,
    pub mode: Mode,
    pub initial: Diagram,
    pub current: Diagram,
    /// ASCII grid of `current`, top row first.
    pub grid: String,
    pub history: Vec<MoveRecord>,
    pub moves_used: usize,
    /// Optimal move count for `mode` from `initial`.
    pub target: usize,
    pub live_rows: Vec<u32>,
    pub is_minimal: bool,
    pub remaining_max: usize,
    pub remaining_min: usize,
    pub created_ms: u64,
    pub updated_ms: u64,
}

/// On-disk form of a session; the history is stored as rows and replayed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SessionSnapshot {
    pub id: String,
    pub mode: Mode,
    pub initial: Diagram,
    pub rows: Vec<u32>,
    pub created_ms: u64,
    pub updated_ms: u64,
}

impl PuzzleSession {
    pub fn new(id: String, mode: Mode, initial: Diagram) -> Self {
        let now = now_ms();
        Self {
            id,
            mode,
            chain: Chain::new(initial),
            created_ms: now,
            updated_ms: now,
        }
    }

    pub fn id(&self) -> &str {
        &self.id
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn initial(&self) -> &Diagram {
        self.chain.start()
    }

    pub fn current(&self) -> &Diagram {
        self.chain.end()
    }

    pub fn history(&self) -> &[MoveRecord] {
        self.chain.moves()
    }

    /// Plays the move at `row`; trivial moves are rejected and change nothing.
    pub fn apply(&mut self, row: u32) -> Result<MoveRecord, SessionError> {
        let record = *self
            .chain
            .push(row)
            .map_err(|_| SessionError::TrivialMove { row })?;
        self.updated_ms = now_ms();
        Ok(record)
    }

    pub fn undo(&mut self) -> Result<MoveRecord, SessionError> {
        let record = self.chain.pop().ok_or(SessionError::EmptyHistory)?;
        self.updated_ms = now_ms();
        Ok(record)
    }

    /// The row the optimal strategy for this session's mode plays next.
    pub fn hint(&self) -> Option<u32> {
        self.mode.next_row(self.current())
    }

    pub fn state(&self) -> SessionState {
        let current = self.current();
        SessionState {
            id: self.id.clone(),
            mode: self.mode,
            initial: self.initial().clone(),
            current: current.clone(),
            grid: current.render_grid(),
            history: self.history().to_vec(),
            moves_used: self.chain.len(),
            target: self.mode.optimum(self.initial()),
            live_rows: current.live_rows(),
            is_minimal: current.is_minimal(),
            remaining_max: max_moves(current),
            remaining_min: min_moves(current),
            created_ms: self.created_ms,
            updated_ms: self.updated_ms,
        }
    }

    pub fn snapshot(&self) -> SessionSnapshot {
        SessionSnapshot {
            id: self.id.clone(),
            mode: self.mode,
            initial: self.initial().clone(),
            rows: self.chain.rows(),
            created_ms: self.created_ms,
            updated_ms: self.updated_ms,
        }
    }

    pub fn restore(snapshot: SessionSnapshot) -> Result<Self, SessionError> {
        let chain = snapshot
            .initial
            .apply_chain(&snapshot.rows)
            .map_err(|e| SessionError::BadSnapshot {
                id: snapshot.id.clone(),
                reason: e.to_string(),
            })?;
        Ok(Self {
            id: snapshot.id,
            mode: snapshot.mode,
            chain,
            created_ms: snapshot.created_ms,
            updated_ms: snapshot.updated_ms,
        })
    }
}

/// Sessions keyed by id. Each session has its own lock, so requests for
/// different sessions never wait on each other.
#[derive(Debug, Default)]
pub struct SessionStore {
    sessions: RwLock<HashMap<String, Arc<Mutex<PuzzleSession>>>>,
}

impl SessionStore {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn create(&self, mode: Mode, initial: Diagram) -> Arc<Mutex<PuzzleSession>> {
        let mut sessions = self.sessions.write().expect("session map lock");
        let id = loop {
            let id = new_session_id();
            if !sessions.contains_key(&id) {
                break id;
            }
        };
        let session = Arc::new(Mutex::new(PuzzleSession::new(id.clone(), mode, initial)));
        sessions.insert(id, Arc::clone(&session));
        session
    }

    pub fn get(&self, id: &str) -> Option<Arc<Mutex<PuzzleSession>>> {
        self.sessions.read().expect("session map lock").get(id).cloned()
    }

    pub fn len(&self) -> usize {
        self.sessions.read().expect("session map lock").len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Snapshots of every session, ordered by id.
    pub fn snapshot(&self) -> Vec<SessionSnapshot> {
        let sessions = self.sessions.read().expect("session map lock");
        let mut out: Vec<SessionSnapshot> = sessions
            .values()
            .map(|s| s.lock().expect("session lock").snapshot())
            .collect();
        out.sort_by(|a, b| a.id.cmp(&b.id));
        out
    }

    pub fn restore(snapshots: Vec<SessionSnapshot>) -> Result<Self, SessionError> {
        let store = Self::new();
        {
            let mut sessions = store.sessions.write().expect("session map lock");
            for snap in snapshots {
                let session = PuzzleSession::restore(snap)?;
                sessions.insert(session.id().to_owned(), Arc::new(Mutex::new(session)));
            }
        }
        Ok(store)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use kohnert_core::presets::small;

    #[test]
    fn ids_are_url_safe_and_distinct() {
        let a = new_session_id();
        assert_eq!(a.len(), 32);
        assert!(a.bytes().all(|b| b.is_ascii_hexdigit()));
        assert_ne!(a, new_session_id());
    }

    #[test]
    fn apply_and_undo() {
        let mut s = PuzzleSession::new("x".into(), Mode::Max, small());
        assert_eq!(s.state().target, 3);
        s.apply(2).unwrap();
        assert_eq!(s.state().remaining_max, 2);
        let before = s.state();
        s.apply(3).unwrap();
        s.undo().unwrap();
        assert_eq!(s.current(), &before.current);
        assert_eq!(s.history(), before.history.as_slice());
        s.undo().unwrap();
        assert_eq!(s.undo(), Err(SessionError::EmptyHistory));
    }

    #[test]
    fn trivial_move_leaves_state() {
        let mut s = PuzzleSession::new("x".into(), Mode::Min, small());
        s.apply(3).unwrap();
        assert!(s.state().is_minimal);
        assert_eq!(s.apply(1), Err(SessionError::TrivialMove { row: 1 }));
        assert_eq!(s.history().len(), 1);
        assert_eq!(s.hint(), None);
    }

    #[test]
    fn snapshot_round_trip() {
        let store = SessionStore::new();
        let session = store.create(Mode::Max, small());
        session.lock().unwrap().apply(2).unwrap();
        let snaps = store.snapshot();
        let restored = SessionStore::restore(snaps.clone()).unwrap();
        assert_eq!(restored.snapshot(), snaps);

        let mut bad = snaps[0].clone();
        bad.rows = vec![1];
        assert!(matches!(
            SessionStore::restore(vec![bad]),
            Err(SessionError::BadSnapshot { .. })
        ));
    }
}
