use std::time::{Duration, Instant};

use serde_json::{json, Value};

const GROVER: &str = include_str!("../circuits/grover.json");

async fn spawn(static_dir: Option<std::path::PathBuf>) -> String {
    let listener = tokio::net::TcpListener::bind("127.0.0.1:0").await.unwrap();
    let addr = listener.local_addr().unwrap();
    tokio::spawn(venus_cli::server::serve(listener, static_dir));
    format!("http://{addr}")
}

async fn post(client: &reqwest::Client, url: String, body: String) -> (u16, Value) {
    let resp = client.post(url).body(body).send().await.unwrap();
    let status = resp.status().as_u16();
    (status, resp.json().await.unwrap())
}

#[tokio::test]
async fn basis_state_geometry() {
    let base = spawn(None).await;
    let client = reqwest::Client::new();
    let (status, body) = post(
        &client,
        format!("{base}/api/state/geometry"),
        r#"{"state":[[1,0],[0,0]]}"#.into(),
    )
    .await;
    assert_eq!(status, 200);
    assert_eq!(body["schema_version"], "venus-api/1");
    let semicircles = body["diagram"]["primitives"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|p| p["kind"] == "semicircle")
        .count();
    assert_eq!(semicircles, 1);
}

#[tokio::test]
async fn grover_frames() {
    let base = spawn(None).await;
    let client = reqwest::Client::new();
    let (status, body) = post(&client, format!("{base}/api/circuit/frames"), GROVER.into()).await;
    assert_eq!(status, 200);
    assert_eq!(body["frames"].as_array().unwrap().len(), 13);
    let enveloped =
        json!({"circuit": serde_json::from_str::<Value>(GROVER).unwrap(), "scale": 320});
    let (status, wrapped) = post(
        &client,
        format!("{base}/api/circuit/frames"),
        enveloped.to_string(),
    )
    .await;
    assert_eq!(status, 200);
    assert_eq!(wrapped["frames"], body["frames"]);
}

#[tokio::test]
async fn short_state_is_rejected() {
    let base = spawn(None).await;
    let client = reqwest::Client::new();
    let (status, body) = post(
        &client,
        format!("{base}/api/state/geometry"),
        r#"{"state":[[1,0]]}"#.into(),
    )
    .await;
    assert_eq!(status, 400);
    let message = body["diagnostics"][0]["message"].as_str().unwrap();
    assert!(message.contains("length must be 2 or 4"), "{message}");
    assert_eq!(body["diagnostics"][0]["location"]["pointer"], "/state");
}

#[tokio::test]
async fn malformed_bodies_are_rejected() {
    let base = spawn(None).await;
    let client = reqwest::Client::new();
    for (path, body) in [
        ("state/geometry", "{"),
        ("state/geometry", "[1,2]"),
        ("circuit/frames", r#"{"qubits":3,"gates":[]}"#),
        (
            "circuit/frames",
            r#"{"qubits":1,"gates":[{"name":"foo","targets":[0]}]}"#,
        ),
    ] {
        let (status, resp) = post(&client, format!("{base}/api/{path}"), body.into()).await;
        assert_eq!(status, 400, "{body}");
        assert!(!resp["diagnostics"].as_array().unwrap().is_empty());
    }
    let resp = client
        .post(format!("{base}/api/state/geometry"))
        .body(vec![0xff, 0xfe])
        .send()
        .await
        .unwrap();
    assert_eq!(resp.status().as_u16(), 400);
}

#[tokio::test]
async fn unknown_fields_warn() {
    let base = spawn(None).await;
    let client = reqwest::Client::new();
    let (status, body) = post(
        &client,
        format!("{base}/api/state/geometry"),
        r#"{"state":[[1,0],[0,0]],"colour":"red"}"#.into(),
    )
    .await;
    assert_eq!(status, 200);
    assert_eq!(body["diagnostics"][0]["severity"], "warning");
    assert_eq!(body["diagnostics"][0]["location"]["pointer"], "/colour");
}

#[tokio::test]
async fn health_reports_version() {
    let base = spawn(None).await;
    let body: Value = reqwest::get(format!("{base}/api/health"))
        .await
        .unwrap()
        .json()
        .await
        .unwrap();
    assert_eq!(body["status"], "ok");
    assert_eq!(body["version"], env!("CARGO_PKG_VERSION"));
}

#[tokio::test]
async fn health_under_concurrent_load() {
    let listener = tokio::net::TcpListener::bind("127.0.0.1:0").await.unwrap();
    let addr = listener.local_addr().unwrap();
    tokio::spawn(venus_cli::server::serve(listener, None));
    let worst = health_probe(addr, 100).await.unwrap();
    assert!(worst < Duration::from_millis(50), "slowest {worst:?}");
}

/// Opens `count` connections, then sends one health request on each at
/// once; returns the slowest write-to-full-response time.
async fn health_probe(addr: std::net::SocketAddr, count: usize) -> Result<Duration, String> {
    use tokio::io::{AsyncReadExt, AsyncWriteExt};
    let mut streams = Vec::with_capacity(count);
    for _ in 0..count {
        streams.push(
            tokio::net::TcpStream::connect(addr)
                .await
                .map_err(|e| e.to_string())?,
        );
    }
    let tasks: Vec<_> = streams
        .into_iter()
        .map(|mut stream| {
            tokio::spawn(async move {
                let start = Instant::now();
                stream
                    .write_all(
                        b"GET /api/health HTTP/1.1\r\nHost: localhost\r\nConnection: close\r\n\r\n",
                    )
                    .await
                    .map_err(|e| e.to_string())?;
                let mut reply = Vec::new();
                stream
                    .read_to_end(&mut reply)
                    .await
                    .map_err(|e| e.to_string())?;
                if !reply.starts_with(b"HTTP/1.1 200") {
                    return Err("health request failed".to_owned());
                }
                Ok(start.elapsed())
            })
        })
        .collect();
    let mut worst = Duration::ZERO;
    for t in tasks {
        worst = worst.max(t.await.map_err(|e| e.to_string())??);
    }
    Ok(worst)
}

#[tokio::test]
async fn responses_do_not_depend_on_history() {
    let base = spawn(None).await;
    let client = reqwest::Client::new();
    let requests = [
        (
            "state/geometry",
            r#"{"state":[[0.6,0],[0,0.8]]}"#.to_string(),
        ),
        (
            "state/geometry",
            r#"{"state":[[0.5,0],[0.5,0],[0.5,0],[-0.5,0]],"order":[1,0]}"#.to_string(),
        ),
        ("circuit/frames", GROVER.to_string()),
        ("state/geometry", r#"{"state":[[1,0]]}"#.to_string()),
    ];
    let mut first = Vec::new();
    for (path, body) in &requests {
        first.push(post(&client, format!("{base}/api/{path}"), body.clone()).await);
    }
    for (i, (path, body)) in requests.iter().enumerate().rev() {
        assert_eq!(
            post(&client, format!("{base}/api/{path}"), body.clone()).await,
            first[i]
        );
    }
}

#[tokio::test]
async fn serves_static_bundle() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(
        dir.path().join("index.html"),
        "<!doctype html><title>t</title>",
    )
    .unwrap();
    let base = spawn(Some(dir.path().to_path_buf())).await;
    let text = reqwest::get(format!("{base}/"))
        .await
        .unwrap()
        .text()
        .await
        .unwrap();
    assert!(text.contains("<title>t</title>"));
    let health = reqwest::get(format!("{base}/api/health")).await.unwrap();
    assert_eq!(health.status().as_u16(), 200);
}
