use std::sync::Arc;

use axum::body::Body;
use axum::http::{Method, Request, StatusCode};
use axum::Router;
use http_body_util::BodyExt;
use serde_json::{json, Value};
use tempfile::TempDir;
use tokio::sync::RwLock;
use tower::ServiceExt;
use treebank::Schema;
use treebank_service::{router, Session};

const FIXTURE: &str = "\
# sent_id = ins_167
# text = Sözü uzatıp seni merakta bıraktım galiba.
1\tSözü\tsöz\tNOUN\tNoun\tCase=Acc|Number=Sing|Person=3\t2\tobj\t_\t_
2\tuzatıp\tuza\tVERB\tVerb\tPolarity=Pos|VerbForm=Conv|Voice=Cau\t5\tadvcl\t_\t_
3\tseni\tsen\tPRON\tPers\tCase=Acc|Number=Sing|Person=2\t5\tobj\t_\t_
4\tmerakta\tmerak\tNOUN\tNoun\tCase=Loc|Number=Sing|Person=3\t5\tobl\t_\t_
5\tbıraktım\tbırak\tVERB\tVerb\tAspect=Perf|Evident=Fh|Number=Sing|Person=1|Polarity=Pos|Tense=Past|VerbForm=Fin\t0\troot\t_\t_
6\tgaliba\tgaliba\tADV\tAdverb\t_\t5\tadvmod\t_\tSpaceAfter=No
7\t.\t.\tPUNCT\tPunc\t_\t5\tpunct\t_\t_

";

fn app(dir: &TempDir) -> (std::path::PathBuf, Router) {
    let path = dir.path().join("doc.conllu");
    std::fs::write(&path, FIXTURE).unwrap();
    let session = Session::open(&path, Schema::default()).unwrap();
    (path, router(Arc::new(RwLock::new(session))))
}

async fn call(app: &Router, method: Method, uri: &str, body: Option<Value>) -> (StatusCode, Value) {
    let mut req = Request::builder().method(method).uri(uri);
    let body = match body {
        Some(v) => {
            req = req.header("content-type", "application/json");
            Body::from(v.to_string())
        }
        None => Body::empty(),
    };
    let resp = app.clone().oneshot(req.body(body).unwrap()).await.unwrap();
    let status = resp.status();
    let bytes = resp.into_body().collect().await.unwrap().to_bytes();
    let value = if bytes.is_empty() { Value::Null } else { serde_json::from_slice(&bytes).unwrap_or(Value::Null) };
    (status, value)
}

#[tokio::test]
async fn document_and_sentence() {
    let dir = TempDir::new().unwrap();
    let (_, app) = app(&dir);
    let (status, doc) = call(&app, Method::GET, "/document", None).await;
    assert_eq!(status, StatusCode::OK);
    assert_eq!(doc["sentences"], 1);
    assert_eq!(doc["revision"], 0);

    let (status, s) = call(&app, Method::GET, "/sentence/ins_167", None).await;
    assert_eq!(status, StatusCode::OK);
    assert_eq!(s["tokens"].as_array().unwrap().len(), 7);
    assert_eq!(s["tokens"][0]["feats"]["Case"], "Acc");
    assert_eq!(s["issues"], json!([]));

    let (status, err) = call(&app, Method::GET, "/sentence/ins_999", None).await;
    assert_eq!(status, StatusCode::NOT_FOUND);
    assert!(err["error"].as_str().unwrap().contains("ins_999"));
}

#[tokio::test]
async fn edit_conflict_and_validation() {
    let dir = TempDir::new().unwrap();
    let (_, app) = app(&dir);
    let edit = |rev: u64, value: &str| {
        json!({"expected_revision": rev, "edit": {"op": "set_field", "id": "1", "field": "UPOS", "value": value}})
    };
    let (status, s) = call(&app, Method::POST, "/sentence/0/edit", Some(edit(0, "NOUNX"))).await;
    assert_eq!(status, StatusCode::OK);
    assert_eq!(s["revision"], 1);
    assert_eq!(s["issues"][0]["code"], "upos");
    assert!(s["issues"][0]["message"].as_str().unwrap().contains("unknown UPOS value"));

    let (status, err) = call(&app, Method::POST, "/sentence/0/edit", Some(edit(0, "NOUN"))).await;
    assert_eq!(status, StatusCode::CONFLICT);
    assert_eq!(err["revision"], 1);

    let bad = json!({"expected_revision": 1, "edit": {"op": "join", "id": 7}});
    let (status, _) = call(&app, Method::POST, "/sentence/0/edit", Some(bad)).await;
    assert_eq!(status, StatusCode::UNPROCESSABLE_ENTITY);
    let (_, doc) = call(&app, Method::GET, "/document", None).await;
    assert_eq!((doc["revision"].clone(), doc["dirty"].clone()), (json!(1), json!(true)));

    let (status, s) = call(&app, Method::POST, "/sentence/0/edit", Some(edit(1, "NOUN"))).await;
    assert_eq!(status, StatusCode::OK);
    assert_eq!(s["issues"], json!([]));
}

#[tokio::test]
async fn split_join_save() {
    let dir = TempDir::new().unwrap();
    let (path, app) = app(&dir);
    let split = json!({"expected_revision": 0, "edit": {"op": "split", "id": 1, "first": "Söz", "second": "ü"}});
    let (status, s) = call(&app, Method::POST, "/sentence/ins_167/edit", Some(split)).await;
    assert_eq!(status, StatusCode::OK);
    assert_eq!(s["tokens"].as_array().unwrap().len(), 8);
    let join = json!({"expected_revision": 1, "edit": {"op": "join", "id": 1}});
    call(&app, Method::POST, "/sentence/ins_167/edit", Some(join)).await;

    let (status, saved) = call(&app, Method::POST, "/save", None).await;
    assert_eq!(status, StatusCode::OK);
    assert_eq!(saved["bytes"], FIXTURE.len());
    assert_eq!(std::fs::read_to_string(&path).unwrap(), FIXTURE);
}

#[tokio::test]
async fn notes_persist_across_routers() {
    let dir = TempDir::new().unwrap();
    let (path, app) = app(&dir);
    let (status, _) = call(&app, Method::PUT, "/sentence/ins_167/note", Some(json!({"note": "check obl"}))).await;
    assert_eq!(status, StatusCode::OK);

    let restarted = router(Arc::new(RwLock::new(Session::open(&path, Schema::default()).unwrap())));
    let (_, note) = call(&restarted, Method::GET, "/sentence/ins_167/note", None).await;
    assert_eq!(note["note"], "check obl");
    let (_, s) = call(&restarted, Method::GET, "/sentence/0", None).await;
    assert_eq!(s["note"], "check obl");
    let (status, _) = call(&restarted, Method::PUT, "/sentence/x/note", Some(json!({"note": "n"}))).await;
    assert_eq!(status, StatusCode::NOT_FOUND);
}

#[tokio::test]
async fn schema_endpoint() {
    let dir = TempDir::new().unwrap();
    let (_, app) = app(&dir);
    let (status, schema) = call(&app, Method::GET, "/schema", None).await;
    assert_eq!(status, StatusCode::OK);
    assert_eq!(schema["upos"].as_array().unwrap().len(), 17);
    assert!(schema["deprel"].as_array().unwrap().contains(&json!("nmod:poss")));
}

#[tokio::test]
async fn malformed_body_is_client_error() {
    let dir = TempDir::new().unwrap();
    let (_, app) = app(&dir);
    let (status, _) = call(&app, Method::POST, "/sentence/0/edit", Some(json!({"edit": {"op": "fly"}}))).await;
    assert!(status.is_client_error());
}
