use std::net::SocketAddr;
use std::sync::Arc;

use axum::extract::{Path, State};
use axum::http::StatusCode;
use axum::response::{IntoResponse, Response};
use axum::routing::{get, post};
use axum::{Json, Router};
use serde::{Deserialize, Serialize};
use serde_json::json;
use tokio::sync::RwLock;

use crate::session::{DocumentSummary, EditRequest, SentencePayload, SentenceRef, Session, SessionError};

/// Edits and saves take the write lock, so they never interleave; reads
/// share a consistent snapshot.
pub type SharedSession = Arc<RwLock<Session>>;

impl IntoResponse for SessionError {
    fn into_response(self) -> Response {
        let status = match &self {
            SessionError::NotFound(_) => StatusCode::NOT_FOUND,
            SessionError::Conflict { .. } => StatusCode::CONFLICT,
            SessionError::Edit(_) => StatusCode::UNPROCESSABLE_ENTITY,
            _ => StatusCode::INTERNAL_SERVER_ERROR,
        };
        let mut body = json!({ "error": self.to_string() });
        if let SessionError::Conflict { current, .. } = self {
            body["revision"] = json!(current);
        }
        (status, Json(body)).into_response()
    }
}

#[derive(Debug, Serialize, Deserialize)]
struct NoteBody {
    note: Option<String>,
}

#[derive(Debug, Serialize)]
struct SaveResult {
    bytes: usize,
    revision: u64,
}

async fn document(State(s): State<SharedSession>) -> Json<DocumentSummary> {
    Json(s.read().await.summary())
}

async fn sentence(
    State(s): State<SharedSession>,
    Path(r): Path<String>,
) -> Result<Json<SentencePayload>, SessionError> {
    s.read().await.sentence(&SentenceRef(r)).map(Json)
}

async fn edit(
    State(s): State<SharedSession>,
    Path(r): Path<String>,
    Json(req): Json<EditRequest>,
) -> Result<Json<SentencePayload>, SessionError> {
    s.write()
        .await
        .apply_edit(&SentenceRef(r), &req.edit, req.expected_revision)
        .map(Json)
}

async fn save(State(s): State<SharedSession>) -> Result<Json<SaveResult>, SessionError> {
    let mut session = s.write().await;
    let bytes = session.save()?;
    Ok(Json(SaveResult {
        bytes,
        revision: session.revision(),
    }))
}

async fn get_note(
    State(s): State<SharedSession>,
    Path(r): Path<String>,
) -> Result<Json<NoteBody>, SessionError> {
    let note = s.read().await.note(&SentenceRef(r))?;
    Ok(Json(NoteBody { note }))
}

async fn put_note(
    State(s): State<SharedSession>,
    Path(r): Path<String>,
    Json(body): Json<NoteBody>,
) -> Result<Json<NoteBody>, SessionError> {
    let r = SentenceRef(r);
    let mut session = s.write().await;
    session.set_note(&r, body.note.as_deref().unwrap_or(""))?;
    Ok(Json(NoteBody { note: session.note(&r)? }))
}

async fn schema(State(s): State<SharedSession>) -> Response {
    Json(s.read().await.schema().clone()).into_response()
}

pub fn router(session: SharedSession) -> Router {
    Router::new()
        .route("/document", get(document))
        .route("/sentence/{ref}", get(sentence))
        .route("/sentence/{ref}/edit", post(edit))
        .route("/sentence/{ref}/note", get(get_note).put(put_note))
        .route("/save", post(save))
        .route("/schema", get(schema))
        .with_state(session)
}

/// Serve `session` on `addr` until the process is stopped.
pub async fn serve(session: Session, addr: SocketAddr) -> std::io::Result<()> {
    let listener = tokio::net::TcpListener::bind(addr).await?;
    axum::serve(listener, router(Arc::new(RwLock::new(session)))).await
}
