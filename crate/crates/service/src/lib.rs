//! HTTP+JSON API over the concept navigation pipeline.
//!
//! Each `POST /v1/search` creates an in-memory session holding the result
//! set and keyword tree; clients then read results per tree node, log
//! interaction events and export the session.

mod api;
pub mod config;
pub mod help;
pub mod session;

use tokio::net::TcpListener;

pub use api::{parse_path, router, AppState};
pub use config::{ConfigError, ServiceConfig};

/// Serves on an already bound listener until ctrl-c.
pub async fn serve_on(listener: TcpListener, state: AppState) -> std::io::Result<()> {
    axum::serve(listener, router(state))
        .with_graceful_shutdown(async {
            let _ = tokio::signal::ctrl_c().await;
        })
        .await
}

/// Binds `config.listen` and serves until ctrl-c.
pub async fn serve(config: ServiceConfig) -> std::io::Result<()> {
    let listener = TcpListener::bind(config.listen).await?;
    tracing::info!(addr = %listener.local_addr()?, "listening");
    serve_on(listener, AppState::new(config)).await
}
